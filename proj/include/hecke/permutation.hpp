#ifndef HECKE_PERMUTATION_HPP
#define HECKE_PERMUTATION_HPP

#include <string>
#include <vector>

namespace hecke {

/// A permutation of {0,...,n-1} stored as its image table.
class Permutation {
public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InvalidPermutation.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  /// Composition: (a * b)(x) = a(b(x)), i.e. b acts first.
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  Permutation inverse() const;

  bool operator==(const Permutation &other) const = default;
  /// Lexicographic order on image tables (shorter degree first).
  bool operator<(const Permutation &other) const {
    return images_ < other.images_;
  }

  bool is_identity() const;

private:
  std::vector<int> images_;
};

/// Parse cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" is the
/// identity. Points must lie in [1, degree]. Whitespace-insensitive.
/// `line` offsets the positions reported in errors.
Permutation parse_cycles(const std::string &text, int degree, int line = 1);

/// Inverse of parse_cycles: 1-based cycle string, "()" for the identity.
std::string format_cycles(const Permutation &p);

} // namespace hecke

#endif
