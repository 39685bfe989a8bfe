#include <doctest.h>

#include <cmath>

#include "hecke/errors.hpp"
#include "hecke/representation.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

Permutation P(const std::string &s, int deg) { return parse_cycles(s, deg); }

PairPtr s3_transposition() {
  return make_pair(3, {P("(1 2)", 3), P("(1 2 3)", 3)}, {P("(1 2)", 3)});
}

bool is_j_minus_i(const RepMatrix &M) {
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c)
      if (!(M.at(r, c) == (r == c ? Scalar() : Scalar(1))))
        return false;
  return true;
}

} // namespace

TEST_CASE("left action on delta vectors") {
  auto pair = s3_transposition();
  HeckeElement e1 = basis_element(pair, 1);
  CosetVector delta = delta_vector(pair, Side::Right, 0);

  CosetVector out = apply_left_action(e1, delta);
  CHECK(out.coords[0] == Scalar());
  CHECK(out.coords[1] == Scalar(1));
  CHECK(out.coords[2] == Scalar(1));

  CHECK(apply_left_action(identity_element(pair), delta) == delta);

  // applying to delta at He reads back f on right-coset representatives
  ElementSampler sampler(pair, 41);
  for (int t = 0; t < 10; ++t) {
    HeckeElement f = sampler.next();
    CosetVector v = apply_left_action(f, delta);
    for (int r = 0; r < pair->right().count(); ++r)
      CHECK(v.coords[r] == f.at(pair->right().rep(r)));
  }
}

TEST_CASE("left action matrix") {
  auto pair = s3_transposition();
  CHECK(left_action_matrix(identity_element(pair)).is_identity());
  CHECK(is_j_minus_i(left_action_matrix(basis_element(pair, 1))));

  // matrix application agrees with apply_left_action
  ElementSampler sampler(pair, 43);
  HeckeElement f = sampler.next();
  RepMatrix M = left_action_matrix(f);
  CosetVector xi = delta_vector(pair, Side::Right, 2);
  CHECK(M.apply(xi) == apply_left_action(f, xi));
}

TEST_CASE("right action matrix") {
  auto pair = s3_transposition();
  CHECK(right_action_matrix(identity_element(pair)).is_identity());
  CHECK(is_j_minus_i(right_action_matrix(basis_element(pair, 1))));
}

TEST_CASE("both actions are star homomorphisms") {
  for (const auto &pair : builtin_roster()) {
    ElementSampler sampler(pair, 47);
    for (int t = 0; t < 5; ++t) {
      HeckeElement f1 = sampler.next(), f2 = sampler.next();
      CHECK(left_action_matrix(convolve(f1, f2)) ==
            left_action_matrix(f1) * left_action_matrix(f2));
      CHECK(right_action_matrix(convolve(f1, f2)) ==
            right_action_matrix(f1) * right_action_matrix(f2));
      CHECK(left_action_matrix(involution(f1)) ==
            left_action_matrix(f1).conjugate_transpose());
      CHECK(right_action_matrix(involution(f1)) ==
            right_action_matrix(f1).conjugate_transpose());
    }
  }
}

TEST_CASE("intertwiner is a permutation matrix and unitary") {
  for (const auto &pair : builtin_roster()) {
    RepMatrix U = intertwiner_u(pair);
    for (int r = 0; r < U.rows(); ++r) {
      int ones = 0;
      for (int c = 0; c < U.cols(); ++c) {
        if (U.at(r, c) == Scalar(1))
          ++ones;
        else
          CHECK(U.at(r, c) == Scalar());
      }
      CHECK(ones == 1);
    }
    RepMatrix Ud = U.conjugate_transpose();
    CHECK((Ud * U).is_identity());
    CHECK((U * Ud).is_identity());
  }

  // H = G: one coset, U is the 1x1 identity
  auto full = make_pair(3, {P("(1 2)", 3), P("(1 2 3)", 3)},
                        {P("(1 2)", 3), P("(1 2 3)", 3)});
  RepMatrix U = intertwiner_u(full);
  CHECK(U.rows() == 1);
  CHECK(U.is_identity());
}

TEST_CASE("U column of an involution representative maps to its own left coset") {
  auto pair = s3_transposition();
  const FiniteGroup &G = pair->group();
  int g = G.id_of(P("(1 3)", 3));
  int col = pair->right().coset_of(g);
  int row = pair->left().coset_of(g);
  CHECK(intertwiner_u(pair).at(row, col) == Scalar(1));
}

TEST_CASE("intertwining identity U lambda_l = lambda_r U") {
  for (const auto &pair : builtin_roster()) {
    for (int cls = 0; cls < pair->n_classes(); ++cls)
      CHECK(check_intertwining(basis_element(pair, cls)).holds);
    ElementSampler sampler(pair, 53);
    for (int t = 0; t < 10; ++t) {
      HeckeElement f = sampler.next();
      IntertwiningReport rep = check_intertwining(f);
      CHECK(rep.holds);
      CHECK(rep.discrepancies.empty());
      // conjugation form of the same identity
      RepMatrix U = intertwiner_u(pair);
      CHECK(right_action_matrix(f) ==
            U * left_action_matrix(f) * U.conjugate_transpose());
    }
  }
}

TEST_CASE("operator norm") {
  auto pair = s3_transposition();
  CHECK(operator_norm(identity_matrix(4, Side::Right)) ==
        doctest::Approx(1.0).epsilon(1e-9));

  RepMatrix A = left_action_matrix(basis_element(pair, 1));
  CHECK(operator_norm(A, 1e-12) == doctest::Approx(2.0).epsilon(1e-9));

  RepMatrix zero(3, 3, Side::Right, Side::Right);
  CHECK(operator_norm(zero) == 0.0);

  RepMatrix rect(2, 3, Side::Right, Side::Right);
  CHECK_THROWS_AS(operator_norm(rect), NonSquare);
  CHECK_THROWS_AS(operator_norm(identity_matrix(2, Side::Right), -1.0), Error);

  // unitary invariance: norms of the two actions agree
  ElementSampler sampler(pair, 59);
  for (int t = 0; t < 5; ++t) {
    HeckeElement f = sampler.next();
    double a = operator_norm(left_action_matrix(f), 1e-10);
    double b = operator_norm(right_action_matrix(f), 1e-10);
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
}

TEST_CASE("apply_left_action validates its input") {
  auto pair = s3_transposition();
  CosetVector wrong_side = delta_vector(pair, Side::Left, 0);
  CHECK_THROWS_AS(apply_left_action(identity_element(pair), wrong_side),
                  PairMismatch);
  CosetVector short_vec{Side::Right, {Scalar(1)}};
  CHECK_THROWS_AS(apply_left_action(identity_element(pair), short_vec),
                  PairMismatch);
}
