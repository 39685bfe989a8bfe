#include "hecke/pair.hpp"

namespace hecke {

HeckePair::HeckePair(FiniteGroup group,
                     const std::vector<Permutation> &subgroup_gens,
                     std::string description)
    : group_(std::move(group)),
      subgroup_(subgroup_from_generators(group_, subgroup_gens)),
      right_(right_cosets(group_, subgroup_)),
      left_(left_cosets(group_, subgroup_)),
      classes_(double_cosets(group_, subgroup_)),
      bijection_(inverse_bijection(right_, left_)),
      description_(std::move(description)) {}

PairPtr make_pair(int degree, const std::vector<Permutation> &group_gens,
                  const std::vector<Permutation> &subgroup_gens,
                  std::string description, std::size_t cap) {
  return std::make_shared<const HeckePair>(
      group_from_generators(degree, group_gens, cap), subgroup_gens,
      std::move(description));
}

} // namespace hecke
