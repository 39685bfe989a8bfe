#ifndef HECKE_VERIFY_HPP
#define HECKE_VERIFY_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hecke/json_io.hpp"

namespace hecke {

struct CheckResult {
  std::string name;
  bool passed = true;
  // Serialized inputs reproducing the failure; see replay_check.
  std::optional<Json> counterexample;
};

struct VerificationReport {
  std::string pair_description;
  std::uint32_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json() const;
};

/// Random elements with small exact coefficients: numerators in [-9, 9],
/// denominators in {1, 2, 3}, nonzero imaginary parts included.
class ElementSampler {
public:
  ElementSampler(PairPtr pair, std::uint32_t seed)
      : pair_(std::move(pair)), rng_(seed) {}
  HeckeElement next();

private:
  Rational next_rational();
  PairPtr pair_;
  std::mt19937 rng_;
};

/// Involutive-algebra suite: closure/bi-invariance, associativity (all basis
/// triples plus `trials` random triples), identity laws, involutivity,
/// anti-multiplicativity, and the |H|-scaled group-convolution oracle
/// identity. `rule` defaults to the right-coset convolution.
VerificationReport verify_star_algebra(const PairPtr &pair, int trials,
                                       std::uint32_t seed,
                                       const ConvolutionRule &rule = convolve_value);

/// Representation suite: homomorphism and star-compatibility of both
/// actions, unitarity of U, the intertwining identity, a faithfulness probe,
/// and floating-point norm consistency.
VerificationReport verify_representation(const PairPtr &pair, int trials,
                                         std::uint32_t seed);

/// Re-runs a single named check on serialized counterexample inputs.
/// Returns the check's verdict, so a recorded failure must return false.
bool replay_check(const PairPtr &pair, const std::string &check_name,
                  const Json &counterexample,
                  const ConvolutionRule &rule = convolve_value);

/// Built-in pair roster covering non-normal, normal, trivial-subgroup and
/// Gelfand-pair cases, all with |G| <= 24.
std::vector<PairPtr> builtin_roster();

} // namespace hecke

#endif
