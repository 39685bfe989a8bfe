#ifndef HECKE_ELEMENT_HPP
#define HECKE_ELEMENT_HPP

#include <functional>
#include <map>
#include <vector>

#include "hecke/pair.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// H-bi-invariant function on G, stored as one coefficient per double coset.
/// Zero coefficients are never stored, so map equality is value equality.
class HeckeElement {
public:
  explicit HeckeElement(PairPtr pair) : pair_(std::move(pair)) {}
  HeckeElement(PairPtr pair, std::map<int, Scalar> coeffs);

  const PairPtr &pair() const { return pair_; }
  const std::map<int, Scalar> &coeffs() const { return coeffs_; }

  /// Value at any group element (constant on its double coset).
  Scalar at(int element_id) const;
  /// Coefficient on a double-coset class.
  Scalar coeff(int cls) const;

  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const HeckeElement &a, const HeckeElement &b) {
    return a.pair_ == b.pair_ && a.coeffs_ == b.coeffs_;
  }

  friend HeckeElement operator+(const HeckeElement &a, const HeckeElement &b);
  friend HeckeElement operator*(const Scalar &s, const HeckeElement &f);

private:
  PairPtr pair_;
  std::map<int, Scalar> coeffs_;
};

/// chi_H: coefficient 1 on class 0. Two-sided unit of the algebra.
HeckeElement identity_element(const PairPtr &pair);

/// Characteristic function of double-coset class `cls`.
HeckeElement basis_element(const PairPtr &pair, int cls);

/// Pointwise convolution rule: value of f1 * f2 at a group element. Used by
/// the verification harness to plug in alternative (wrong) rules.
using ConvolutionRule =
    std::function<Scalar(const HeckeElement &, const HeckeElement &, int)>;

/// (f1 * f2)(g) = sum over right-coset representatives gamma of
/// f1(g gamma^{-1}) f2(gamma). The default rule.
Scalar convolve_value(const HeckeElement &f1, const HeckeElement &f2,
                      int g_id);

/// Same integrand summed over left-coset representatives instead. Not a
/// valid convolution on non-normal pairs; kept as a harness plug-in.
Scalar left_coset_rule_value(const HeckeElement &f1, const HeckeElement &f2,
                             int g_id);

/// Builds the product by evaluating `rule` at one canonical representative
/// per double coset. Throws PairMismatch if f1, f2 live over different pairs.
HeckeElement convolve_with_rule(const HeckeElement &f1, const HeckeElement &f2,
                                const ConvolutionRule &rule);

HeckeElement convolve(const HeckeElement &f1, const HeckeElement &f2);

/// f*(g) = conj(f(g^{-1})).
HeckeElement involution(const HeckeElement &f);

/// c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k. Entries are
/// nonnegative integers (coset counts).
std::vector<std::vector<std::vector<Scalar>>>
structure_constants(const PairPtr &pair);

/// Plain group-algebra convolution on dense functions G -> Scalar:
/// (F1 * F2)(g) = sum over all x in G of F1(g x^{-1}) F2(x).
/// Independent of all coset machinery; serves as the verification oracle.
std::vector<Scalar> oracle_group_convolve(const FiniteGroup &G,
                                          const std::vector<Scalar> &F1,
                                          const std::vector<Scalar> &F2);

/// Evaluates f at every element of G.
std::vector<Scalar> lift(const HeckeElement &f);

} // namespace hecke

#endif
