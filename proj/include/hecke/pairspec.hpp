#ifndef HECKE_PAIRSPEC_HPP
#define HECKE_PAIRSPEC_HPP

#include <string>
#include <vector>

#include "hecke/pair.hpp"

namespace hecke {

/// Textual description of a Hecke pair:
///   degree: 3
///   group: (1 2), (1 2 3)
///   subgroup: (1 2)
/// Generator lists are comma-separated cycle strings; an empty list is
/// allowed (trivial subgroup). Lines starting with '#' are comments.
struct PairSpec {
  int degree = 0;
  std::vector<std::string> group_generators;
  std::vector<std::string> subgroup_generators;
};

/// Throws SyntaxError / SemanticError with 1-based line/column positions.
PairSpec parse_pair_spec(const std::string &text);

/// Enumerates the group and subgroup. Throws SemanticError when a subgroup
/// generator is not a member of the group.
PairPtr build_pair(const PairSpec &spec, std::size_t cap = kDefaultGroupCap);

} // namespace hecke

#endif
