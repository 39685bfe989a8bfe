#ifndef HECKE_COSETS_HPP
#define HECKE_COSETS_HPP

#include <vector>

#include "hecke/group.hpp"

namespace hecke {

enum class Side { Right, Left }; // Right = H\G, Left = G/H

/// Partition of G into cosets of one side, with canonical representatives.
/// The canonical representative of a coset is its minimal element id, and
/// cosets are ordered by representative.
class CosetSpace {
public:
  Side side() const { return side_; }
  const FiniteGroup &group() const { return *group_; }
  const Subgroup &subgroup() const { return *subgroup_; }

  int count() const { return static_cast<int>(reps_.size()); }
  int rep(int coset) const { return reps_[coset]; }
  int coset_of(int element_id) const { return coset_of_[element_id]; }

  friend CosetSpace make_cosets(const FiniteGroup &G, const Subgroup &H,
                                Side side);

private:
  Side side_ = Side::Right;
  const FiniteGroup *group_ = nullptr;
  const Subgroup *subgroup_ = nullptr;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
};

CosetSpace right_cosets(const FiniteGroup &G, const Subgroup &H);
CosetSpace left_cosets(const FiniteGroup &G, const Subgroup &H);

/// Partition of G into double cosets HgH. Class 0 is H itself. left_count
/// and right_count give the number of left (resp. right) cosets contained in
/// each class.
class DoubleCosetSpace {
public:
  const FiniteGroup &group() const { return *group_; }
  const Subgroup &subgroup() const { return *subgroup_; }

  int count() const { return static_cast<int>(reps_.size()); }
  int rep(int cls) const { return reps_[cls]; }
  int class_of(int element_id) const { return class_of_[element_id]; }
  int size(int cls) const { return sizes_[cls]; }
  int left_count(int cls) const { return left_count_[cls]; }
  int right_count(int cls) const { return right_count_[cls]; }

  friend DoubleCosetSpace double_cosets(const FiniteGroup &G,
                                        const Subgroup &H);

private:
  const FiniteGroup *group_ = nullptr;
  const Subgroup *subgroup_ = nullptr;
  std::vector<int> reps_;
  std::vector<int> class_of_;
  std::vector<int> sizes_;
  std::vector<int> left_count_;
  std::vector<int> right_count_;
};

DoubleCosetSpace double_cosets(const FiniteGroup &G, const Subgroup &H);

/// The index bijection realized by gamma -> gamma^{-1}, mapping the right
/// coset H*gamma to the left coset gamma^{-1}*H.
class CosetBijection {
public:
  int right_to_left(int right_idx) const { return right_to_left_[right_idx]; }
  int left_to_right(int left_idx) const { return left_to_right_[left_idx]; }
  int count() const { return static_cast<int>(right_to_left_.size()); }

  friend CosetBijection inverse_bijection(const CosetSpace &rc,
                                          const CosetSpace &lc);

private:
  std::vector<int> right_to_left_;
  std::vector<int> left_to_right_;
};

/// Throws PairMismatch unless rc (right) and lc (left) were built from the
/// same group and subgroup.
CosetBijection inverse_bijection(const CosetSpace &rc, const CosetSpace &lc);

} // namespace hecke

#endif
