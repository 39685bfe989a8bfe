#ifndef HECKE_GROUP_HPP
#define HECKE_GROUP_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "hecke/permutation.hpp"

namespace hecke {

constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite permutation group, fully enumerated. Element ids are positions in
/// the BFS closure from the identity with generators pre-sorted, so the
/// enumeration is reproducible. Immutable after construction.
class FiniteGroup {
public:
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int identity_id() const { return 0; }

  const Permutation &element(int id) const { return elements_[id]; }

  /// Id of a permutation, or -1 if not a member.
  int id_of(const Permutation &p) const;
  bool contains(const Permutation &p) const { return id_of(p) >= 0; }

  int mul(int a, int b) const;
  int inv(int a) const { return inverses_[a]; }

  friend FiniteGroup group_from_generators(int degree,
                                           const std::vector<Permutation> &gens,
                                           std::size_t cap);

private:
  int degree_ = 1;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> inverses_;
  // Full |G|^2 table only for small groups; otherwise mul composes on demand.
  std::vector<int> mul_table_;
};

/// BFS closure of the generators. Throws InvalidPermutation on degree
/// mismatch and GroupTooLarge when the closure exceeds `cap`.
FiniteGroup group_from_generators(int degree,
                                  const std::vector<Permutation> &gens,
                                  std::size_t cap = kDefaultGroupCap);

/// Subgroup of an already-enumerated group, stored by element id.
class Subgroup {
public:
  const FiniteGroup &parent() const { return *parent_; }
  int order() const { return static_cast<int>(member_ids_.size()); }
  const std::vector<int> &member_ids() const { return member_ids_; }
  bool contains(int id) const { return membership_[id]; }

  friend Subgroup subgroup_from_generators(const FiniteGroup &G,
                                           const std::vector<Permutation> &gens);

private:
  const FiniteGroup *parent_ = nullptr;
  std::vector<int> member_ids_; // sorted
  std::vector<char> membership_;
};

/// Smallest subgroup of G containing the generators. Throws NotAMember if a
/// generator is not an element of G.
Subgroup subgroup_from_generators(const FiniteGroup &G,
                                  const std::vector<Permutation> &gens);

} // namespace hecke

#endif
