#include "hecke/element.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

void require_same_pair(const HeckeElement &a, const HeckeElement &b) {
  if (a.pair() != b.pair())
    throw PairMismatch("elements built over different Hecke pairs");
}

} // namespace

HeckeElement::HeckeElement(PairPtr pair, std::map<int, Scalar> coeffs)
    : pair_(std::move(pair)) {
  for (auto &[cls, c] : coeffs)
    if (!c.is_zero())
      coeffs_.emplace(cls, std::move(c));
}

Scalar HeckeElement::at(int element_id) const {
  return coeff(pair_->classes().class_of(element_id));
}

Scalar HeckeElement::coeff(int cls) const {
  auto it = coeffs_.find(cls);
  return it == coeffs_.end() ? Scalar{} : it->second;
}

HeckeElement operator+(const HeckeElement &a, const HeckeElement &b) {
  require_same_pair(a, b);
  std::map<int, Scalar> sum = a.coeffs_;
  for (const auto &[cls, c] : b.coeffs_)
    sum[cls] += c;
  return HeckeElement(a.pair_, std::move(sum));
}

HeckeElement operator*(const Scalar &s, const HeckeElement &f) {
  std::map<int, Scalar> scaled;
  for (const auto &[cls, c] : f.coeffs_)
    scaled.emplace(cls, s * c);
  return HeckeElement(f.pair_, std::move(scaled));
}

HeckeElement identity_element(const PairPtr &pair) {
  return basis_element(pair, 0);
}

HeckeElement basis_element(const PairPtr &pair, int cls) {
  return HeckeElement(pair, {{cls, Scalar(1)}});
}

Scalar convolve_value(const HeckeElement &f1, const HeckeElement &f2,
                      int g_id) {
  const FiniteGroup &G = f1.pair()->group();
  const CosetSpace &rc = f1.pair()->right();
  Scalar acc;
  for (int r = 0; r < rc.count(); ++r) {
    int gamma = rc.rep(r);
    acc += f1.at(G.mul(g_id, G.inv(gamma))) * f2.at(gamma);
  }
  return acc;
}

Scalar left_coset_rule_value(const HeckeElement &f1, const HeckeElement &f2,
                             int g_id) {
  const FiniteGroup &G = f1.pair()->group();
  const CosetSpace &lc = f1.pair()->left();
  Scalar acc;
  for (int l = 0; l < lc.count(); ++l) {
    int delta = lc.rep(l);
    acc += f1.at(G.mul(g_id, G.inv(delta))) * f2.at(delta);
  }
  return acc;
}

HeckeElement convolve_with_rule(const HeckeElement &f1, const HeckeElement &f2,
                                const ConvolutionRule &rule) {
  require_same_pair(f1, f2);
  const DoubleCosetSpace &dc = f1.pair()->classes();
  std::map<int, Scalar> coeffs;
  for (int cls = 0; cls < dc.count(); ++cls)
    coeffs[cls] = rule(f1, f2, dc.rep(cls));
  return HeckeElement(f1.pair(), std::move(coeffs));
}

HeckeElement convolve(const HeckeElement &f1, const HeckeElement &f2) {
  return convolve_with_rule(f1, f2, convolve_value);
}

HeckeElement involution(const HeckeElement &f) {
  const DoubleCosetSpace &dc = f.pair()->classes();
  const FiniteGroup &G = f.pair()->group();
  std::map<int, Scalar> coeffs;
  for (const auto &[cls, c] : f.coeffs()) {
    // Class of the inverses of class `cls`; taking the rep's inverse suffices.
    int inv_cls = dc.class_of(G.inv(dc.rep(cls)));
    coeffs[inv_cls] = c.conj();
  }
  return HeckeElement(f.pair(), std::move(coeffs));
}

std::vector<std::vector<std::vector<Scalar>>>
structure_constants(const PairPtr &pair) {
  const int n = pair->n_classes();
  std::vector<std::vector<std::vector<Scalar>>> c(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HeckeElement prod = convolve(basis_element(pair, i), basis_element(pair, j));
      for (int k = 0; k < n; ++k)
        c[i][j][k] = prod.coeff(k);
    }
  return c;
}

std::vector<Scalar> oracle_group_convolve(const FiniteGroup &G,
                                          const std::vector<Scalar> &F1,
                                          const std::vector<Scalar> &F2) {
  std::vector<Scalar> out(G.order());
  for (int g = 0; g < G.order(); ++g) {
    Scalar acc;
    for (int x = 0; x < G.order(); ++x)
      acc += F1[G.mul(g, G.inv(x))] * F2[x];
    out[g] = acc;
  }
  return out;
}

std::vector<Scalar> lift(const HeckeElement &f) {
  const FiniteGroup &G = f.pair()->group();
  std::vector<Scalar> out(G.order());
  for (int g = 0; g < G.order(); ++g)
    out[g] = f.at(g);
  return out;
}

} // namespace hecke
