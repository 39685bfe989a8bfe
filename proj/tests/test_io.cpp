#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"
#include "hecke/pairspec.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

TEST_CASE("pair spec parsing") {
  PairSpec spec =
      parse_pair_spec("degree: 3\ngroup: (1 2), (1 2 3)\nsubgroup: (1 2)\n");
  CHECK(spec.degree == 3);
  CHECK(spec.group_generators == std::vector<std::string>{"(1 2)", "(1 2 3)"});
  CHECK(spec.subgroup_generators == std::vector<std::string>{"(1 2)"});

  PairPtr pair = build_pair(spec);
  CHECK(pair->group().order() == 6);
  CHECK(pair->subgroup().order() == 2);

  // empty subgroup list gives the trivial subgroup
  PairSpec trivial =
      parse_pair_spec("degree: 3\ngroup: (1 2), (1 2 3)\nsubgroup:\n");
  CHECK(build_pair(trivial)->subgroup().order() == 1);

  // comments and blank lines are ignored
  PairSpec commented = parse_pair_spec(
      "# a pair\n\ndegree: 3\ngroup: (1 2), (1 2 3)\nsubgroup: (1 2)\n");
  CHECK(commented.degree == 3);
}

TEST_CASE("pair spec errors carry positions") {
  CHECK_THROWS_AS(parse_pair_spec("degree: 3\ngroup (1 2)\nsubgroup:\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_pair_spec("degree: x\ngroup: ()\nsubgroup:\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_pair_spec("group: ()\nsubgroup:\n"), SyntaxError);
  CHECK_THROWS_AS(parse_pair_spec("degree: 0\ngroup: ()\nsubgroup:\n"),
                  SemanticError);
  try {
    parse_pair_spec("degree: 3\nnonsense: 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError &e) {
    CHECK(e.line == 2);
  }

  // subgroup generator outside the generated group
  PairSpec bad = parse_pair_spec("degree: 3\ngroup: (1 2)\nsubgroup: (1 2 3)\n");
  CHECK_THROWS_AS(build_pair(bad), SemanticError);

  // generator point exceeding the degree
  PairSpec out_of_range =
      parse_pair_spec("degree: 3\ngroup: (1 4)\nsubgroup:\n");
  CHECK_THROWS_AS(build_pair(out_of_range), SemanticError);
}

TEST_CASE("scalar json round trip") {
  Scalar s(Rational(-7, 2), Rational(5, 3));
  CHECK(scalar_to_json(s) == Json::array({-7, 2, 5, 3}));
  CHECK(scalar_from_json(scalar_to_json(s)) == s);

  CHECK_THROWS_AS(scalar_from_json(Json::array({1, 0, 0, 1})), SemanticError);
  CHECK_THROWS_AS(scalar_from_json(Json::array({1, 1, 0})), SemanticError);
  CHECK_THROWS_AS(scalar_from_json(Json::array({1.5, 1, 0, 1})), SemanticError);
}

TEST_CASE("element json round trip on random elements") {
  for (const auto &pair : builtin_roster()) {
    ElementSampler sampler(pair, 71);
    for (int t = 0; t < 10; ++t) {
      HeckeElement f = sampler.next();
      CHECK(element_from_json(pair, element_to_json(f)) == f);
    }
  }
}

TEST_CASE("element json accepts any class member as key") {
  auto pair = builtin_roster().front(); // S3 / <(1 2)>
  // (1 3) and (1 2 3) are in the same double coset
  HeckeElement a = element_from_json(pair, Json{{"(1 3)", {1, 1, 0, 1}}});
  HeckeElement b = element_from_json(pair, Json{{"(1 2 3)", {1, 1, 0, 1}}});
  CHECK(a == b);
  CHECK_THROWS_AS(element_from_json(pair, Json{{"(1 2)(3 4)", {1, 1, 0, 1}}}),
                  SemanticError);
}
