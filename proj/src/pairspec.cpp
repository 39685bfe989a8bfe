#include "hecke/pairspec.hpp"

#include <cctype>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_generators(const std::string &value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty())
      out.push_back(item);
  }
  return out;
}

} // namespace

PairSpec parse_pair_spec(const std::string &text) {
  PairSpec spec;
  bool saw_degree = false, saw_group = false, saw_subgroup = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#')
      continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw SyntaxError("expected 'key: value'", lineno, 1);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "degree") {
      try {
        spec.degree = std::stoi(value);
      } catch (const std::exception &) {
        throw SyntaxError("degree must be an integer", lineno,
                          static_cast<int>(colon) + 2);
      }
      if (spec.degree < 1)
        throw SemanticError("degree must be at least 1", lineno,
                            static_cast<int>(colon) + 2);
      saw_degree = true;
    } else if (key == "group") {
      spec.group_generators = split_generators(value);
      saw_group = true;
    } else if (key == "subgroup") {
      spec.subgroup_generators = split_generators(value);
      saw_subgroup = true;
    } else {
      throw SyntaxError("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (!saw_degree)
    throw SyntaxError("missing 'degree' line", lineno + 1, 1);
  if (!saw_group)
    throw SyntaxError("missing 'group' line", lineno + 1, 1);
  if (!saw_subgroup)
    throw SyntaxError("missing 'subgroup' line", lineno + 1, 1);
  return spec;
}

PairPtr build_pair(const PairSpec &spec, std::size_t cap) {
  std::vector<Permutation> group_gens, subgroup_gens;
  for (const auto &s : spec.group_generators)
    group_gens.push_back(parse_cycles(s, spec.degree));
  for (const auto &s : spec.subgroup_generators)
    subgroup_gens.push_back(parse_cycles(s, spec.degree));
  try {
    return make_pair(spec.degree, group_gens, subgroup_gens, "", cap);
  } catch (const NotAMember &e) {
    throw SemanticError(e.what());
  }
}

} // namespace hecke
