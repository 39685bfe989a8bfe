#include "hecke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hecke/errors.hpp"
#include "hecke/representation.hpp"

namespace hecke {

bool VerificationReport::all_passed() const {
  for (const auto &c : checks)
    if (!c.passed)
      return false;
  return true;
}

Json VerificationReport::to_json() const {
  Json jchecks = Json::array();
  for (const auto &c : checks) {
    Json jc{{"name", c.name}, {"passed", c.passed}};
    if (c.counterexample)
      jc["counterexample"] = *c.counterexample;
    jchecks.push_back(std::move(jc));
  }
  return Json{{"pair", pair_description},
              {"seed", seed},
              {"trials", trials},
              {"checks", std::move(jchecks)},
              {"all_passed", all_passed()}};
}

Rational ElementSampler::next_rational() {
  // Explicit modulo arithmetic so the stream is identical on every platform.
  long num = static_cast<long>(rng_() % 19) - 9;
  long den = static_cast<long>(rng_() % 3) + 1;
  return Rational(num, den);
}

HeckeElement ElementSampler::next() {
  std::map<int, Scalar> coeffs;
  for (int cls = 0; cls < pair_->n_classes(); ++cls)
    coeffs[cls] = Scalar(next_rational(), next_rational());
  return HeckeElement(pair_, std::move(coeffs));
}

namespace {

using CheckFn = std::function<bool(const PairPtr &, const Json &,
                                   const ConvolutionRule &)>;

HeckeElement get(const PairPtr &pair, const Json &inputs, const char *key) {
  return element_from_json(pair, inputs.at(key));
}

bool check_bi_invariance(const PairPtr &pair, const Json &in,
                         const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2");
  HeckeElement prod = convolve_with_rule(f1, f2, rule);
  // The rule must be constant on double cosets; compare every element of G
  // against the canonical-representative value.
  for (int g = 0; g < pair->group().order(); ++g)
    if (!(rule(f1, f2, g) == prod.coeff(pair->classes().class_of(g))))
      return false;
  return true;
}

bool check_associativity(const PairPtr &pair, const Json &in,
                         const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2"),
               f3 = get(pair, in, "f3");
  return convolve_with_rule(convolve_with_rule(f1, f2, rule), f3, rule) ==
         convolve_with_rule(f1, convolve_with_rule(f2, f3, rule), rule);
}

bool check_identity_laws(const PairPtr &pair, const Json &in,
                         const ConvolutionRule &rule) {
  HeckeElement f = get(pair, in, "f");
  HeckeElement e = identity_element(pair);
  return convolve_with_rule(e, f, rule) == f &&
         convolve_with_rule(f, e, rule) == f;
}

bool check_involutive(const PairPtr &pair, const Json &in,
                      const ConvolutionRule &) {
  HeckeElement f = get(pair, in, "f");
  return involution(involution(f)) == f;
}

bool check_anti_multiplicative(const PairPtr &pair, const Json &in,
                               const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2");
  return involution(convolve_with_rule(f1, f2, rule)) ==
         convolve_with_rule(involution(f2), involution(f1), rule);
}

bool check_oracle_identity(const PairPtr &pair, const Json &in,
                           const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2");
  std::vector<Scalar> expected =
      oracle_group_convolve(pair->group(), lift(f1), lift(f2));
  Scalar h_order(static_cast<long>(pair->subgroup().order()));
  std::vector<Scalar> got = lift(h_order * convolve_with_rule(f1, f2, rule));
  return got == expected;
}

bool check_left_homomorphism(const PairPtr &pair, const Json &in,
                             const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2");
  return left_action_matrix(convolve_with_rule(f1, f2, rule)) ==
         left_action_matrix(f1) * left_action_matrix(f2);
}

bool check_right_homomorphism(const PairPtr &pair, const Json &in,
                              const ConvolutionRule &rule) {
  HeckeElement f1 = get(pair, in, "f1"), f2 = get(pair, in, "f2");
  return right_action_matrix(convolve_with_rule(f1, f2, rule)) ==
         right_action_matrix(f1) * right_action_matrix(f2);
}

bool check_left_star(const PairPtr &pair, const Json &in,
                     const ConvolutionRule &) {
  HeckeElement f = get(pair, in, "f");
  return left_action_matrix(involution(f)) ==
         left_action_matrix(f).conjugate_transpose();
}

bool check_right_star(const PairPtr &pair, const Json &in,
                      const ConvolutionRule &) {
  HeckeElement f = get(pair, in, "f");
  return right_action_matrix(involution(f)) ==
         right_action_matrix(f).conjugate_transpose();
}

bool check_u_unitary(const PairPtr &pair, const Json &,
                     const ConvolutionRule &) {
  RepMatrix U = intertwiner_u(pair);
  RepMatrix Ud = U.conjugate_transpose();
  return (Ud * U).is_identity() && (U * Ud).is_identity();
}

bool check_intertwining_identity(const PairPtr &pair, const Json &in,
                                 const ConvolutionRule &) {
  return check_intertwining(get(pair, in, "f")).holds;
}

bool check_faithfulness(const PairPtr &pair, const Json &in,
                        const ConvolutionRule &) {
  // lambda_l(f) applied to the delta at He reads back f on right-coset reps.
  HeckeElement f = get(pair, in, "f");
  CosetVector v = apply_left_action(f, delta_vector(pair, Side::Right, 0));
  for (int r = 0; r < pair->right().count(); ++r)
    if (!(v.coords[r] == f.at(pair->right().rep(r))))
      return false;
  return true;
}

bool check_norm_consistency(const PairPtr &pair, const Json &in,
                            const ConvolutionRule &) {
  HeckeElement f = get(pair, in, "f");
  constexpr double tol = 1e-9;
  double a = operator_norm(left_action_matrix(f), tol);
  double b = operator_norm(right_action_matrix(f), tol);
  return std::abs(a - b) <= 10 * tol * std::max(1.0, std::max(a, b));
}

const std::map<std::string, CheckFn> &check_registry() {
  static const std::map<std::string, CheckFn> registry = {
      {"closure_bi_invariance", check_bi_invariance},
      {"associativity", check_associativity},
      {"identity_laws", check_identity_laws},
      {"involution_involutive", check_involutive},
      {"involution_anti_multiplicative", check_anti_multiplicative},
      {"oracle_group_convolution", check_oracle_identity},
      {"left_homomorphism", check_left_homomorphism},
      {"right_homomorphism", check_right_homomorphism},
      {"left_star", check_left_star},
      {"right_star", check_right_star},
      {"u_unitary", check_u_unitary},
      {"intertwining", check_intertwining_identity},
      {"faithfulness", check_faithfulness},
      {"norm_consistency", check_norm_consistency},
  };
  return registry;
}

void run_check(VerificationReport &report, const PairPtr &pair,
               const std::string &name, const std::vector<Json> &inputs,
               const ConvolutionRule &rule) {
  const CheckFn &fn = check_registry().at(name);
  CheckResult result{name, true, std::nullopt};
  for (const Json &in : inputs) {
    if (!fn(pair, in, rule)) {
      result.passed = false;
      result.counterexample = in;
      break;
    }
  }
  report.checks.push_back(std::move(result));
}

Json one(const PairPtr &, const char *key, const HeckeElement &f) {
  return Json{{key, element_to_json(f)}};
}

std::vector<Json> single_inputs(const PairPtr &pair, ElementSampler &sampler,
                                int trials) {
  std::vector<Json> inputs;
  for (int cls = 0; cls < pair->n_classes(); ++cls)
    inputs.push_back(one(pair, "f", basis_element(pair, cls)));
  for (int t = 0; t < trials; ++t)
    inputs.push_back(one(pair, "f", sampler.next()));
  return inputs;
}

std::vector<Json> pair_inputs(const PairPtr &pair, ElementSampler &sampler,
                              int trials) {
  std::vector<Json> inputs;
  for (int i = 0; i < pair->n_classes(); ++i)
    for (int j = 0; j < pair->n_classes(); ++j)
      inputs.push_back(Json{{"f1", element_to_json(basis_element(pair, i))},
                            {"f2", element_to_json(basis_element(pair, j))}});
  for (int t = 0; t < trials; ++t) {
    HeckeElement f1 = sampler.next(), f2 = sampler.next();
    inputs.push_back(
        Json{{"f1", element_to_json(f1)}, {"f2", element_to_json(f2)}});
  }
  return inputs;
}

std::vector<Json> triple_inputs(const PairPtr &pair, ElementSampler &sampler,
                                int trials) {
  std::vector<Json> inputs;
  for (int i = 0; i < pair->n_classes(); ++i)
    for (int j = 0; j < pair->n_classes(); ++j)
      for (int k = 0; k < pair->n_classes(); ++k)
        inputs.push_back(Json{{"f1", element_to_json(basis_element(pair, i))},
                              {"f2", element_to_json(basis_element(pair, j))},
                              {"f3", element_to_json(basis_element(pair, k))}});
  for (int t = 0; t < trials; ++t) {
    HeckeElement f1 = sampler.next(), f2 = sampler.next(), f3 = sampler.next();
    inputs.push_back(Json{{"f1", element_to_json(f1)},
                          {"f2", element_to_json(f2)},
                          {"f3", element_to_json(f3)}});
  }
  return inputs;
}

} // namespace

VerificationReport verify_star_algebra(const PairPtr &pair, int trials,
                                       std::uint32_t seed,
                                       const ConvolutionRule &rule) {
  VerificationReport report{pair->description(), seed, trials, {}};
  ElementSampler sampler(pair, seed);
  run_check(report, pair, "closure_bi_invariance",
            pair_inputs(pair, sampler, trials), rule);
  run_check(report, pair, "associativity", triple_inputs(pair, sampler, trials),
            rule);
  run_check(report, pair, "identity_laws", single_inputs(pair, sampler, trials),
            rule);
  run_check(report, pair, "involution_involutive",
            single_inputs(pair, sampler, trials), rule);
  run_check(report, pair, "involution_anti_multiplicative",
            pair_inputs(pair, sampler, trials), rule);
  run_check(report, pair, "oracle_group_convolution",
            pair_inputs(pair, sampler, trials), rule);
  return report;
}

VerificationReport verify_representation(const PairPtr &pair, int trials,
                                         std::uint32_t seed) {
  VerificationReport report{pair->description(), seed, trials, {}};
  ElementSampler sampler(pair, seed);
  const ConvolutionRule &rule = convolve_value;
  run_check(report, pair, "left_homomorphism",
            pair_inputs(pair, sampler, trials), rule);
  run_check(report, pair, "right_homomorphism",
            pair_inputs(pair, sampler, trials), rule);
  run_check(report, pair, "left_star", single_inputs(pair, sampler, trials),
            rule);
  run_check(report, pair, "right_star", single_inputs(pair, sampler, trials),
            rule);
  run_check(report, pair, "u_unitary", {Json::object()}, rule);
  run_check(report, pair, "intertwining", single_inputs(pair, sampler, trials),
            rule);
  run_check(report, pair, "faithfulness", single_inputs(pair, sampler, trials),
            rule);
  // Norm agreement is floating-point; a couple of samples suffice.
  run_check(report, pair, "norm_consistency",
            single_inputs(pair, sampler, std::min(trials, 3)), rule);
  return report;
}

bool replay_check(const PairPtr &pair, const std::string &check_name,
                  const Json &counterexample, const ConvolutionRule &rule) {
  auto it = check_registry().find(check_name);
  if (it == check_registry().end())
    throw Error("unknown check name: " + check_name);
  return it->second(pair, counterexample, rule);
}

std::vector<PairPtr> builtin_roster() {
  const auto P = [](const std::string &s, int deg) {
    return parse_cycles(s, deg);
  };
  std::vector<PairPtr> roster;
  std::vector<Permutation> s3 = {P("(1 2)", 3), P("(1 2 3)", 3)};
  std::vector<Permutation> s4 = {P("(1 2)", 4), P("(1 2 3 4)", 4)};
  std::vector<Permutation> a4 = {P("(1 2 3)", 4), P("(2 3 4)", 4)};
  roster.push_back(make_pair(3, s3, {P("(1 2)", 3)}, "S3 / <(1 2)>"));
  roster.push_back(make_pair(3, s3, {P("(1 2 3)", 3)}, "S3 / A3"));
  roster.push_back(make_pair(3, s3, {}, "S3 / {e}"));
  roster.push_back(
      make_pair(4, s4, {P("(1 2)", 4), P("(3 4)", 4)}, "S4 / S2xS2"));
  roster.push_back(make_pair(4, s4, {P("(1 2 3 4)", 4)}, "S4 / <(1 2 3 4)>"));
  roster.push_back(make_pair(4, a4, {P("(1 2 3)", 4)}, "A4 / <(1 2 3)>"));
  return roster;
}

} // namespace hecke
