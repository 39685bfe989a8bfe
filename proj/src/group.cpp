#include "hecke/group.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
constexpr std::size_t kMulTableLimit = 1000;
}

int FiniteGroup::id_of(const Permutation &p) const {
  auto it = index_.find(p.images());
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return id_of(elements_[a] * elements_[b]);
}

FiniteGroup group_from_generators(int degree,
                                  const std::vector<Permutation> &gens,
                                  std::size_t cap) {
  if (degree < 1)
    throw InvalidPermutation("degree must be at least 1");
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree mismatch");

  std::vector<Permutation> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  FiniteGroup G;
  G.degree_ = degree;
  G.elements_.push_back(Permutation::identity(degree));
  G.index_[G.elements_[0].images()] = 0;

  // BFS over right multiplication by the sorted generators.
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto &gen : sorted) {
      Permutation next = G.elements_[head] * gen;
      if (G.index_.count(next.images()))
        continue;
      if (G.elements_.size() >= cap)
        throw GroupTooLarge("group closure exceeds cap of " +
                            std::to_string(cap) + " elements");
      G.index_[next.images()] = static_cast<int>(G.elements_.size());
      G.elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = G.elements_.size();
  G.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    G.inverses_[i] = G.id_of(G.elements_[i].inverse());

  if (n <= kMulTableLimit) {
    G.mul_table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        G.mul_table_[i * n + j] = G.id_of(G.elements_[i] * G.elements_[j]);
  }
  return G;
}

Subgroup subgroup_from_generators(const FiniteGroup &G,
                                  const std::vector<Permutation> &gens) {
  std::vector<int> gen_ids;
  for (const auto &g : gens) {
    int id = G.id_of(g);
    if (id < 0)
      throw NotAMember("subgroup generator " + format_cycles(g) +
                       " is not an element of the group");
    gen_ids.push_back(id);
  }

  Subgroup H;
  H.parent_ = &G;
  H.membership_.assign(G.order(), 0);
  std::vector<int> queue = {G.identity_id()};
  H.membership_[G.identity_id()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int gid : gen_ids) {
      int next = G.mul(queue[head], gid);
      if (!H.membership_[next]) {
        H.membership_[next] = 1;
        queue.push_back(next);
      }
    }
  }
  for (int id = 0; id < G.order(); ++id)
    if (H.membership_[id])
      H.member_ids_.push_back(id);
  return H;
}

} // namespace hecke
