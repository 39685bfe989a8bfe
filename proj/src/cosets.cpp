#include "hecke/cosets.hpp"

#include <cassert>

#include "hecke/errors.hpp"

namespace hecke {

CosetSpace make_cosets(const FiniteGroup &G, const Subgroup &H, Side side) {
  CosetSpace cs;
  cs.side_ = side;
  cs.group_ = &G;
  cs.subgroup_ = &H;
  cs.coset_of_.assign(G.order(), -1);
  // Scanning element ids in order makes the first member of each coset its
  // minimal id, hence the canonical representative.
  for (int g = 0; g < G.order(); ++g) {
    if (cs.coset_of_[g] >= 0)
      continue;
    int idx = static_cast<int>(cs.reps_.size());
    cs.reps_.push_back(g);
    for (int h : H.member_ids()) {
      int member = side == Side::Right ? G.mul(h, g) : G.mul(g, h);
      cs.coset_of_[member] = idx;
    }
  }
  return cs;
}

CosetSpace right_cosets(const FiniteGroup &G, const Subgroup &H) {
  return make_cosets(G, H, Side::Right);
}

CosetSpace left_cosets(const FiniteGroup &G, const Subgroup &H) {
  return make_cosets(G, H, Side::Left);
}

DoubleCosetSpace double_cosets(const FiniteGroup &G, const Subgroup &H) {
  DoubleCosetSpace dc;
  dc.group_ = &G;
  dc.subgroup_ = &H;
  dc.class_of_.assign(G.order(), -1);

  CosetSpace rc = right_cosets(G, H);
  CosetSpace lc = left_cosets(G, H);

  for (int g = 0; g < G.order(); ++g) {
    if (dc.class_of_[g] >= 0)
      continue;
    int cls = static_cast<int>(dc.reps_.size());
    dc.reps_.push_back(g);
    int size = 0;
    std::vector<char> seen_right(rc.count(), 0), seen_left(lc.count(), 0);
    int n_right = 0, n_left = 0;
    for (int h1 : H.member_ids()) {
      int hg = G.mul(h1, g);
      for (int h2 : H.member_ids()) {
        int member = G.mul(hg, h2);
        if (dc.class_of_[member] < 0) {
          dc.class_of_[member] = cls;
          ++size;
          if (!seen_right[rc.coset_of(member)]) {
            seen_right[rc.coset_of(member)] = 1;
            ++n_right;
          }
          if (!seen_left[lc.coset_of(member)]) {
            seen_left[lc.coset_of(member)] = 1;
            ++n_left;
          }
        }
      }
    }
    dc.sizes_.push_back(size);
    dc.right_count_.push_back(n_right);
    dc.left_count_.push_back(n_left);
    assert(n_right * H.order() == size);
    assert(n_left * H.order() == size);
  }
  return dc;
}

CosetBijection inverse_bijection(const CosetSpace &rc, const CosetSpace &lc) {
  if (rc.side() != Side::Right || lc.side() != Side::Left)
    throw PairMismatch("inverse_bijection expects (right, left) coset spaces");
  if (&rc.group() != &lc.group() || &rc.subgroup() != &lc.subgroup())
    throw PairMismatch("coset spaces built from different pairs");

  const FiniteGroup &G = rc.group();
  CosetBijection bij;
  bij.right_to_left_.assign(rc.count(), -1);
  bij.left_to_right_.assign(lc.count(), -1);
  for (int r = 0; r < rc.count(); ++r) {
    int l = lc.coset_of(G.inv(rc.rep(r)));
    bij.right_to_left_[r] = l;
    bij.left_to_right_[l] = r;
  }
  return bij;
}

} // namespace hecke
