#ifndef HECKE_REPRESENTATION_HPP
#define HECKE_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "hecke/element.hpp"

namespace hecke {

/// Dense coefficient vector over the cosets of one side.
struct CosetVector {
  Side space = Side::Right;
  std::vector<Scalar> coords;

  friend bool operator==(const CosetVector &, const CosetVector &) = default;
};

CosetVector zero_vector(const PairPtr &pair, Side space);
CosetVector delta_vector(const PairPtr &pair, Side space, int index);

/// Dense matrix of exact scalars indexed by coset spaces. row_space/col_space
/// record which side each index runs over.
class RepMatrix {
public:
  RepMatrix() = default;
  RepMatrix(int rows, int cols, Side row_space, Side col_space)
      : rows_(rows), cols_(cols), row_space_(row_space), col_space_(col_space),
        data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Side row_space() const { return row_space_; }
  Side col_space() const { return col_space_; }

  Scalar &at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar &at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RepMatrix conjugate_transpose() const;
  bool is_identity() const;

  CosetVector apply(const CosetVector &v) const;

  friend RepMatrix operator*(const RepMatrix &a, const RepMatrix &b);
  friend bool operator==(const RepMatrix &a, const RepMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  int rows_ = 0, cols_ = 0;
  Side row_space_ = Side::Right, col_space_ = Side::Right;
  std::vector<Scalar> data_;
};

RepMatrix identity_matrix(int n, Side space);

/// (lambda_l(f) xi)(Hg) = sum over right reps gamma of f(g gamma^{-1}) xi(H gamma).
CosetVector apply_left_action(const HeckeElement &f, const CosetVector &xi);

/// Matrix of the left action on l^2(H\G): M[Hx][Hgamma] = f(x gamma^{-1}).
RepMatrix left_action_matrix(const HeckeElement &f);

/// Matrix of the right action on l^2(G/H): N[gH][deltaH] = f(g^{-1} delta).
RepMatrix right_action_matrix(const HeckeElement &f);

/// The unitary U: l^2(H\G) -> l^2(G/H), (U xi)(gH) = xi(H g^{-1}).
/// A permutation matrix; rows indexed by left cosets, columns by right cosets.
RepMatrix intertwiner_u(const PairPtr &pair);

struct IntertwiningReport {
  bool holds = true;
  // (row, col, lhs, rhs) for each entry where U*M != N*U.
  std::vector<std::tuple<int, int, Scalar, Scalar>> discrepancies;
};

/// Checks U * lambda_l(f) = lambda_r(f) * U as exact matrices.
IntertwiningReport check_intertwining(const HeckeElement &f);

/// Largest singular value by power iteration on M^dagger M in floating point.
/// Deterministic start vector; throws NonSquare / NoConvergence.
double operator_norm(const RepMatrix &M, double tol = 1e-9,
                     int max_iterations = 10000);

} // namespace hecke

#endif
