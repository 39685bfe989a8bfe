#include "hecke/representation.hpp"

#include <cmath>
#include <complex>

#include "hecke/errors.hpp"

namespace hecke {

CosetVector zero_vector(const PairPtr &pair, Side space) {
  const CosetSpace &cs = space == Side::Right ? pair->right() : pair->left();
  return CosetVector{space, std::vector<Scalar>(cs.count())};
}

CosetVector delta_vector(const PairPtr &pair, Side space, int index) {
  CosetVector v = zero_vector(pair, space);
  v.coords[index] = Scalar(1);
  return v;
}

RepMatrix RepMatrix::conjugate_transpose() const {
  RepMatrix out(cols_, rows_, col_space_, row_space_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out.at(c, r) = at(r, c).conj();
  return out;
}

bool RepMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!(at(r, c) == (r == c ? Scalar(1) : Scalar{})))
        return false;
  return true;
}

CosetVector RepMatrix::apply(const CosetVector &v) const {
  CosetVector out{row_space_, std::vector<Scalar>(rows_)};
  for (int r = 0; r < rows_; ++r) {
    Scalar acc;
    for (int c = 0; c < cols_; ++c)
      acc += at(r, c) * v.coords[c];
    out.coords[r] = acc;
  }
  return out;
}

RepMatrix operator*(const RepMatrix &a, const RepMatrix &b) {
  if (a.cols_ != b.rows_)
    throw NonSquare("matrix dimension mismatch in product");
  RepMatrix out(a.rows_, b.cols_, a.row_space_, b.col_space_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a.at(r, k);
      if (aik.is_zero())
        continue;
      for (int c = 0; c < b.cols_; ++c)
        out.at(r, c) += aik * b.at(k, c);
    }
  return out;
}

RepMatrix identity_matrix(int n, Side space) {
  RepMatrix m(n, n, space, space);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Scalar(1);
  return m;
}

CosetVector apply_left_action(const HeckeElement &f, const CosetVector &xi) {
  if (xi.space != Side::Right)
    throw PairMismatch("left action expects a vector over H\\G");
  const PairPtr &pair = f.pair();
  const CosetSpace &rc = pair->right();
  if (static_cast<int>(xi.coords.size()) != rc.count())
    throw PairMismatch("vector length does not match the coset count");
  const FiniteGroup &G = pair->group();

  CosetVector out = zero_vector(pair, Side::Right);
  for (int row = 0; row < rc.count(); ++row) {
    int g = rc.rep(row);
    Scalar acc;
    for (int col = 0; col < rc.count(); ++col)
      acc += f.at(G.mul(g, G.inv(rc.rep(col)))) * xi.coords[col];
    out.coords[row] = acc;
  }
  return out;
}

RepMatrix left_action_matrix(const HeckeElement &f) {
  const PairPtr &pair = f.pair();
  const CosetSpace &rc = pair->right();
  const FiniteGroup &G = pair->group();
  RepMatrix M(rc.count(), rc.count(), Side::Right, Side::Right);
  for (int r = 0; r < rc.count(); ++r)
    for (int c = 0; c < rc.count(); ++c)
      M.at(r, c) = f.at(G.mul(rc.rep(r), G.inv(rc.rep(c))));
  return M;
}

RepMatrix right_action_matrix(const HeckeElement &f) {
  const PairPtr &pair = f.pair();
  const CosetSpace &lc = pair->left();
  const FiniteGroup &G = pair->group();
  RepMatrix N(lc.count(), lc.count(), Side::Left, Side::Left);
  for (int r = 0; r < lc.count(); ++r)
    for (int c = 0; c < lc.count(); ++c)
      N.at(r, c) = f.at(G.mul(G.inv(lc.rep(r)), lc.rep(c)));
  return N;
}

RepMatrix intertwiner_u(const PairPtr &pair) {
  const CosetBijection &bij = pair->bijection();
  const int n = pair->index();
  RepMatrix U(n, n, Side::Left, Side::Right);
  for (int r = 0; r < n; ++r)
    U.at(bij.right_to_left(r), r) = Scalar(1);
  return U;
}

IntertwiningReport check_intertwining(const HeckeElement &f) {
  RepMatrix U = intertwiner_u(f.pair());
  RepMatrix lhs = U * left_action_matrix(f);
  RepMatrix rhs = right_action_matrix(f) * U;
  IntertwiningReport report;
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c)
      if (!(lhs.at(r, c) == rhs.at(r, c))) {
        report.holds = false;
        report.discrepancies.emplace_back(r, c, lhs.at(r, c), rhs.at(r, c));
      }
  return report;
}

namespace {

using Cplx = std::complex<double>;

std::vector<Cplx> to_float(const RepMatrix &M) {
  std::vector<Cplx> out(static_cast<std::size_t>(M.rows()) * M.cols());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c)
      out[static_cast<std::size_t>(r) * M.cols() + c] =
          Cplx(static_cast<double>(M.at(r, c).re),
               static_cast<double>(M.at(r, c).im));
  return out;
}

// y = A^dagger (A x)
std::vector<Cplx> gram_apply(const std::vector<Cplx> &A, int n,
                             const std::vector<Cplx> &x) {
  std::vector<Cplx> ax(n, Cplx{}), out(n, Cplx{});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      ax[r] += A[static_cast<std::size_t>(r) * n + c] * x[c];
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      out[c] += std::conj(A[static_cast<std::size_t>(r) * n + c]) * ax[r];
  return out;
}

double norm2(const std::vector<Cplx> &v) {
  double s = 0;
  for (const auto &z : v)
    s += std::norm(z);
  return std::sqrt(s);
}

} // namespace

double operator_norm(const RepMatrix &M, double tol, int max_iterations) {
  if (M.rows() != M.cols())
    throw NonSquare("operator_norm requires a square matrix");
  if (tol <= 0)
    throw Error("tolerance must be positive");
  const int n = M.rows();
  if (n == 0)
    return 0.0;
  std::vector<Cplx> A = to_float(M);
  bool all_zero = true;
  for (const auto &z : A)
    if (z != Cplx{}) {
      all_zero = false;
      break;
    }
  if (all_zero)
    return 0.0;

  // Two fixed start vectors; the second covers the case where the all-ones
  // vector is orthogonal to the dominant singular subspace (or in the kernel).
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Cplx> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = attempt == 0 ? Cplx(1.0, 0.0) : Cplx(1.0 / (i + 1.0), 0.0);
    double vn = norm2(v);
    for (auto &z : v)
      z /= vn;

    double lambda = 0.0;
    bool degenerate = false;
    for (int it = 0; it < max_iterations; ++it) {
      std::vector<Cplx> w = gram_apply(A, n, v);
      double wn = norm2(w);
      if (wn == 0.0) { // start landed in the kernel; try the other start
        degenerate = true;
        break;
      }
      double next = wn; // estimate of the top eigenvalue of A^dagger A
      for (auto &z : w)
        z /= wn;
      v = std::move(w);
      if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, next))
        return std::sqrt(next);
      lambda = next;
    }
    if (!degenerate || attempt == 1)
      throw NoConvergence("power iteration did not converge within " +
                          std::to_string(max_iterations) + " iterations");
  }
  return 0.0; // unreachable
}

} // namespace hecke
