#include "hecke/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int img : images_) {
    if (img < 0 || img >= n || seen[img])
      throw InvalidPermutation("image table is not a bijection on {0,...," +
                               std::to_string(n - 1) + "}");
    seen[img] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw InvalidPermutation("composing permutations of different degrees");
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    images[i] = a.images_[b.images_[i]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i)
    images[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation parse_cycles(const std::string &text, int degree, int line) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);

  size_t pos = 0;
  const auto col = [&] { return static_cast<int>(pos) + 1; };
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    throw SyntaxError("empty permutation", line, col());

  bool saw_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw SyntaxError("expected '('", line, col());
    ++pos;

    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size())
        throw SyntaxError("unterminated cycle", line, col());
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw SyntaxError("expected a point or ')'", line, col());
      int start_col = col();
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000)
          throw SyntaxError("point out of range", line, start_col);
        ++pos;
      }
      if (value < 1 || value > degree)
        throw SemanticError("point " + std::to_string(value) +
                                " out of range for degree " +
                                std::to_string(degree),
                            line, start_col);
      int point = static_cast<int>(value) - 1;
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        throw SemanticError("repeated point in cycle", line, start_col);
      cycle.push_back(point);
    }
    saw_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from)
        throw SemanticError("point repeated across cycles", line, col());
      images[from] = to;
    }
  }
  if (!saw_cycle)
    throw SyntaxError("expected a cycle", line, col());
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation &p) {
  const int n = p.degree();
  std::vector<char> done(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (done[start] || p(start) == start)
      continue;
    any = true;
    out << '(';
    int cur = start;
    bool first = true;
    do {
      if (!first)
        out << ' ';
      out << cur + 1;
      done[cur] = 1;
      cur = p(cur);
      first = false;
    } while (cur != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

} // namespace hecke
