#ifndef HECKE_PAIR_HPP
#define HECKE_PAIR_HPP

#include <memory>
#include <string>
#include <vector>

#include "hecke/cosets.hpp"
#include "hecke/group.hpp"

namespace hecke {

/// A finite Hecke pair (G, H) with all coset structure precomputed. Owns the
/// group, so internal references stay valid for the pair's lifetime.
/// Non-copyable; share via shared_ptr.
class HeckePair {
public:
  HeckePair(FiniteGroup group, const std::vector<Permutation> &subgroup_gens,
            std::string description = "");

  HeckePair(const HeckePair &) = delete;
  HeckePair &operator=(const HeckePair &) = delete;

  const FiniteGroup &group() const { return group_; }
  const Subgroup &subgroup() const { return subgroup_; }
  const CosetSpace &right() const { return right_; }
  const CosetSpace &left() const { return left_; }
  const DoubleCosetSpace &classes() const { return classes_; }
  const CosetBijection &bijection() const { return bijection_; }
  const std::string &description() const { return description_; }

  int index() const { return right_.count(); } // [G : H]
  int n_classes() const { return classes_.count(); }

private:
  FiniteGroup group_;
  Subgroup subgroup_;
  CosetSpace right_;
  CosetSpace left_;
  DoubleCosetSpace classes_;
  CosetBijection bijection_;
  std::string description_;
};

using PairPtr = std::shared_ptr<const HeckePair>;

PairPtr make_pair(int degree, const std::vector<Permutation> &group_gens,
                  const std::vector<Permutation> &subgroup_gens,
                  std::string description = "",
                  std::size_t cap = kDefaultGroupCap);

} // namespace hecke

#endif
