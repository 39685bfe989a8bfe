#include <doctest.h>

#include <numeric>
#include <set>

#include "hecke/cosets.hpp"
#include "hecke/errors.hpp"
#include "hecke/pair.hpp"

using namespace hecke;

namespace {

Permutation P(const std::string &s, int deg) { return parse_cycles(s, deg); }

PairPtr s3_transposition() {
  return make_pair(3, {P("(1 2)", 3), P("(1 2 3)", 3)}, {P("(1 2)", 3)});
}

PairPtr s4_klein() {
  return make_pair(4, {P("(1 2)", 4), P("(1 2 3 4)", 4)},
                   {P("(1 2)", 4), P("(3 4)", 4)});
}

} // namespace

TEST_CASE("coset counts") {
  auto p = s3_transposition();
  CHECK(p->right().count() == 3);
  CHECK(p->left().count() == 3);

  // H = G: a single coset.
  auto full = make_pair(3, {P("(1 2)", 3), P("(1 2 3)", 3)},
                        {P("(1 2)", 3), P("(1 2 3)", 3)});
  CHECK(full->right().count() == 1);
  CHECK(full->classes().count() == 1);

  auto k = s4_klein();
  CHECK(k->right().count() == 6);
  CHECK(k->left().count() == 6);
}

TEST_CASE("cosets partition the group") {
  for (const auto &p : {s3_transposition(), s4_klein()}) {
    const FiniteGroup &G = p->group();
    for (const CosetSpace *cs : {&p->right(), &p->left()}) {
      std::vector<int> sizes(cs->count(), 0);
      for (int g = 0; g < G.order(); ++g) {
        int idx = cs->coset_of(g);
        REQUIRE(idx >= 0);
        REQUIRE(idx < cs->count());
        ++sizes[idx];
      }
      for (int s : sizes)
        CHECK(s == p->subgroup().order());
    }
    // invariance under the subgroup action
    for (int g = 0; g < G.order(); ++g)
      for (int h : p->subgroup().member_ids()) {
        CHECK(p->right().coset_of(g) == p->right().coset_of(G.mul(h, g)));
        CHECK(p->left().coset_of(g) == p->left().coset_of(G.mul(g, h)));
      }
  }
}

TEST_CASE("canonical representative is the minimal member") {
  auto p = s4_klein();
  for (const CosetSpace *cs : {&p->right(), &p->left()}) {
    std::vector<int> min_member(cs->count(), -1);
    for (int g = 0; g < p->group().order(); ++g)
      if (min_member[cs->coset_of(g)] < 0)
        min_member[cs->coset_of(g)] = g;
    for (int c = 0; c < cs->count(); ++c)
      CHECK(cs->rep(c) == min_member[c]);
  }
}

TEST_CASE("double cosets of S3 over a transposition") {
  auto p = s3_transposition();
  const DoubleCosetSpace &dc = p->classes();
  REQUIRE(dc.count() == 2);
  CHECK(dc.rep(0) == p->group().identity_id());
  CHECK(dc.size(0) == 2);
  CHECK(dc.size(1) == 4);
  CHECK(dc.right_count(0) == 1);
  CHECK(dc.right_count(1) == 2);
  CHECK(dc.left_count(0) == 1);
  CHECK(dc.left_count(1) == 2);
}

TEST_CASE("double cosets of a normal subgroup coincide with cosets") {
  auto p = make_pair(3, {P("(1 2)", 3), P("(1 2 3)", 3)}, {P("(1 2 3)", 3)});
  const DoubleCosetSpace &dc = p->classes();
  REQUIRE(dc.count() == 2);
  CHECK(dc.size(0) == 3);
  CHECK(dc.size(1) == 3);
  for (int g = 0; g < p->group().order(); ++g)
    CHECK(dc.class_of(g) == p->right().coset_of(g));
}

TEST_CASE("S4 over the Klein-type subgroup has three classes") {
  auto pair = s4_klein();
  const DoubleCosetSpace &dc = pair->classes();
  CHECK(dc.count() == 3);
  int total = 0;
  for (int k = 0; k < dc.count(); ++k) {
    total += dc.size(k);
    CHECK(dc.right_count(k) * 4 == dc.size(k));
    CHECK(dc.left_count(k) * 4 == dc.size(k));
  }
  CHECK(total == 24);
}

TEST_CASE("inverse bijection") {
  auto p = s3_transposition();
  const FiniteGroup &G = p->group();
  const CosetBijection &bij = p->bijection();

  for (int g = 0; g < G.order(); ++g)
    CHECK(bij.right_to_left(p->right().coset_of(g)) ==
          p->left().coset_of(G.inv(g)));

  for (int r = 0; r < bij.count(); ++r)
    CHECK(bij.left_to_right(bij.right_to_left(r)) == r);
  for (int l = 0; l < bij.count(); ++l)
    CHECK(bij.right_to_left(bij.left_to_right(l)) == l);

  // gamma = (1 3) is an involution: H(1 3) maps to (1 3)H.
  int g = G.id_of(P("(1 3)", 3));
  REQUIRE(g >= 0);
  CHECK(bij.right_to_left(p->right().coset_of(g)) == p->left().coset_of(g));

  // gamma = (1 2 3): H(1 2 3) maps to (1 3 2)H.
  int c3 = G.id_of(P("(1 2 3)", 3));
  int c3inv = G.id_of(P("(1 3 2)", 3));
  CHECK(bij.right_to_left(p->right().coset_of(c3)) == p->left().coset_of(c3inv));
}

TEST_CASE("inverse_bijection rejects mismatched spaces") {
  auto p = s3_transposition();
  auto q = s4_klein();
  CHECK_THROWS_AS(inverse_bijection(p->right(), q->left()), PairMismatch);
  CHECK_THROWS_AS(inverse_bijection(p->left(), p->right()), PairMismatch);
}

TEST_CASE("double-coset refinement recovers the group order") {
  for (const auto &p : {s3_transposition(), s4_klein()}) {
    const DoubleCosetSpace &dc = p->classes();
    int right_total = 0, left_total = 0, size_total = 0;
    for (int k = 0; k < dc.count(); ++k) {
      right_total += dc.right_count(k);
      left_total += dc.left_count(k);
      size_total += dc.size(k);
    }
    CHECK(right_total == p->right().count());
    CHECK(left_total == p->left().count());
    CHECK(size_total == p->group().order());
  }
}
