#pragma once

// The poset of nontrivial p-subgroups with its conjugation action, plus the
// elementary-abelian (Quillen) and radical (Bouc) sub-posets.
//
// Enumeration is breadth-first over orders p, p^2, ...: every subgroup of
// order p^(k+1) contains a normal subgroup of order p^k, hence arises from a
// level-k node Q as Q<y> with y in N_G(Q), y^p in Q. Candidates are
// deduplicated by member set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "brownlab/defs.hpp"
#include "brownlab/group.hpp"
#include "brownlab/subgroup.hpp"

namespace brownlab {

struct PSubgroupPoset {
  const FiniteGroup* group = nullptr;
  long long prime = 0;
  bool prime_divides_order = false;
  std::vector<Subgroup> nodes;  // canonically sorted (lex on member sets)
  // less_bits[i] marks j with nodes[i] < nodes[j] (strict inclusion).
  std::vector<std::vector<std::uint64_t>> less_bits;
  // action[i][g] = index of nodes[i]^g.
  std::vector<std::vector<std::uint32_t>> action;

  std::size_t size() const { return nodes.size(); }

  bool less(std::size_t i, std::size_t j) const {
    return (less_bits[i][j >> 6] >> (j & 63)) & 1;
  }

  std::size_t act(std::size_t node, std::size_t g) const { return action[node][g]; }
};

namespace detail {

inline PSubgroupPoset finish_poset(const FiniteGroup& G, long long p,
                                   std::vector<Subgroup> nodes) {
  PSubgroupPoset poset;
  poset.group = &G;
  poset.prime = p;
  poset.prime_divides_order = static_cast<long long>(G.order()) % p == 0;
  std::sort(nodes.begin(), nodes.end());
  poset.nodes = std::move(nodes);

  const std::size_t n = poset.nodes.size();
  const std::size_t words = (n + 63) / 64;
  poset.less_bits.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && poset.nodes[i].order() < poset.nodes[j].order() &&
          is_subgroup_of(poset.nodes[i], poset.nodes[j]))
        poset.less_bits[i][j >> 6] |= std::uint64_t{1} << (j & 63);

  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[poset.nodes[i].members()] = i;
  poset.action.assign(n, std::vector<std::uint32_t>(G.order()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < G.order(); ++g) {
      auto it = index.find(conjugate_subgroup(poset.nodes[i], g).members());
      if (it == index.end())
        throw invariant_violation("conjugation left the p-subgroup poset");
      poset.action[i][g] = static_cast<std::uint32_t>(it->second);
    }
  return poset;
}

}  // namespace detail

inline PSubgroupPoset enumerate_p_subgroups(const FiniteGroup& G, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (static_cast<long long>(G.order()) % p != 0)
    return detail::finish_poset(G, p, {});  // empty poset, flagged

  std::vector<Subgroup> all;
  std::map<std::vector<std::size_t>, char> seen;

  std::vector<Subgroup> level;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (G.element_order(i) != p) continue;
    std::size_t arr[1] = {i};
    Subgroup q = Subgroup::generated(G, arr);
    if (seen.emplace(q.members(), 1).second) level.push_back(q);
  }

  while (!level.empty()) {
    for (const auto& q : level) all.push_back(q);
    std::vector<Subgroup> next;
    for (const auto& q : level) {
      for (std::size_t y : detail::normalizer_members_within(G, Subgroup::whole(G), q)) {
        if (q.contains(y)) continue;
        std::size_t yp = y;
        for (long long k = 1; k < p; ++k) yp = G.mul(yp, y);
        if (!q.contains(yp)) continue;
        std::vector<std::size_t> gens(q.members());
        gens.push_back(y);
        Subgroup ext = Subgroup::generated(G, gens);
        if (ext.order() != q.order() * static_cast<std::size_t>(p))
          throw invariant_violation("p-subgroup extension has wrong order");
        if (seen.emplace(ext.members(), 1).second) next.push_back(ext);
      }
    }
    level = std::move(next);
  }
  return detail::finish_poset(G, p, std::move(all));
}

inline bool is_elementary_abelian(const Subgroup& h, long long p) {
  const FiniteGroup& G = h.parent();
  for (std::size_t a : h.members()) {
    if (a != G.identity() && G.element_order(a) != p) return false;
    for (std::size_t b : h.members())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  }
  return true;
}

namespace detail {

inline PSubgroupPoset filter_poset(const PSubgroupPoset& poset,
                                   const std::vector<char>& keep) {
  std::vector<Subgroup> nodes;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (keep[i]) nodes.push_back(poset.nodes[i]);
  return finish_poset(*poset.group, poset.prime, std::move(nodes));
}

}  // namespace detail

// Restriction to elementary abelian nodes.
inline PSubgroupPoset quillen_filter(const PSubgroupPoset& poset) {
  std::vector<char> keep(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i)
    keep[i] = is_elementary_abelian(poset.nodes[i], poset.prime);
  return detail::filter_poset(poset, keep);
}

// Restriction to radical nodes Q = O_p(N_G(Q)).
inline PSubgroupPoset bouc_filter(const PSubgroupPoset& poset) {
  const FiniteGroup& G = *poset.group;
  std::vector<char> keep(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Subgroup n = normalizer(G, poset.nodes[i]);
    keep[i] = p_core(G, n, poset.prime) == poset.nodes[i];
  }
  return detail::filter_poset(poset, keep);
}

// Orbits of the conjugation action; each orbit sorted, orbits ordered by
// their minimal node index.
inline std::vector<std::vector<std::size_t>> node_orbits(const PSubgroupPoset& poset) {
  std::vector<char> done(poset.size(), 0);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> stack{i};
    done[i] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      orbit.push_back(v);
      for (std::size_t g = 0; g < poset.group->order(); ++g) {
        std::size_t w = poset.act(v, g);
        if (!done[w]) {
          done[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace brownlab
