#pragma once

// Subgroups stored extensionally: sorted member-index sets plus a bitset for
// O(1) membership. Sylow subgroups are found by normalizer ascent; O_p by
// intersecting Sylow conjugates. Everything is deterministic: ties are broken
// by element index, subgroups compare lexicographically on member sequences.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brownlab/defs.hpp"
#include "brownlab/group.hpp"

namespace brownlab {

class Subgroup {
public:
  Subgroup(const FiniteGroup& parent, std::vector<std::size_t> members)
      : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    build_bits();
    validate();
  }

  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

  static Subgroup whole(const FiniteGroup& g) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
  }

  static Subgroup generated(const FiniteGroup& g, std::span<const std::size_t> gens) {
    std::vector<std::size_t> closure{g.identity()};
    std::vector<char> in(g.order(), 0);
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t s : gens) {
        std::size_t x = g.mul(closure[i], s);
        if (!in[x]) {
          in[x] = 1;
          closure.push_back(x);
        }
      }
    }
    return Subgroup(g, std::move(closure));
  }

  const FiniteGroup& parent() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  const std::vector<std::uint64_t>& member_bits() const { return bits_; }

  bool is_whole_group() const { return order() == parent_->order(); }

  // Greedy minimal generating sequence, deterministic.
  std::vector<std::size_t> generator_witnesses() const {
    std::vector<std::size_t> gens;
    Subgroup cur = trivial(*parent_);
    for (std::size_t m : members_) {
      if (cur.order() == order()) break;
      if (cur.contains(m)) continue;
      gens.push_back(m);
      cur = generated(*parent_, gens);
    }
    return gens;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  // Canonical order: lexicographic on member index sequences.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.members_ < b.members_;
  }

private:
  void build_bits() {
    bits_.assign((parent_->order() + 63) / 64, 0);
    for (std::size_t m : members_) {
      if (m >= parent_->order()) throw std::invalid_argument("member index out of range");
      bits_[m >> 6] |= std::uint64_t{1} << (m & 63);
    }
  }

  void validate() const {
    if (!contains(parent_->identity()))
      throw std::invalid_argument("subgroup must contain the identity");
    for (std::size_t a : members_) {
      if (!contains(parent_->inv(a)))
        throw std::invalid_argument("subgroup not closed under inverse");
      for (std::size_t b : members_)
        if (!contains(parent_->mul(a, b)))
          throw std::invalid_argument("subgroup not closed under product");
    }
  }

  const FiniteGroup* parent_;
  std::vector<std::size_t> members_;
  std::vector<std::uint64_t> bits_;
};

inline bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
  if (&h.parent() != &k.parent()) return false;
  for (std::size_t i = 0; i < h.member_bits().size(); ++i)
    if (h.member_bits()[i] & ~k.member_bits()[i]) return false;
  return true;
}

inline Subgroup conjugate_subgroup(const Subgroup& h, std::size_t g) {
  const FiniteGroup& G = h.parent();
  std::vector<std::size_t> members;
  members.reserve(h.order());
  for (std::size_t m : h.members()) members.push_back(G.conj(m, g));
  return Subgroup(G, std::move(members));
}

inline Subgroup subgroup_intersection(const Subgroup& h, const Subgroup& k) {
  if (&h.parent() != &k.parent())
    throw std::invalid_argument("intersection requires a common parent group");
  std::vector<std::size_t> members;
  for (std::size_t m : h.members())
    if (k.contains(m)) members.push_back(m);
  return Subgroup(h.parent(), std::move(members));
}

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& h) {
  if (&h.parent() != &G) throw std::invalid_argument("subgroup belongs to a different group");
  std::vector<std::size_t> members;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool fixes = true;
    for (std::size_t m : h.members())
      if (!h.contains(G.conj(m, g))) {
        fixes = false;
        break;
      }
    if (fixes) members.push_back(g);
  }
  return Subgroup(G, std::move(members));
}

namespace detail {

// Normalizer of q inside the member set of h.
inline std::vector<std::size_t> normalizer_members_within(const FiniteGroup& G,
                                                          const Subgroup& h,
                                                          const Subgroup& q) {
  std::vector<std::size_t> members;
  for (std::size_t g : h.members()) {
    bool fixes = true;
    for (std::size_t m : q.members())
      if (!q.contains(G.conj(m, g))) {
        fixes = false;
        break;
      }
    if (fixes) members.push_back(g);
  }
  return members;
}

}  // namespace detail

// Sylow p-subgroup of the subgroup h (all indices relative to G). Normalizer
// ascent: grow a p-subgroup q by an element y of N_h(q) with y^p in q until
// the full p-part of |h| is reached. Deterministic: minimal candidates first.
inline Subgroup sylow_in_subgroup(const FiniteGroup& G, const Subgroup& h, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const long long target = p_part(static_cast<long long>(h.order()), p);
  if (target == 1) return Subgroup::trivial(G);

  std::size_t seed = 0;
  bool found = false;
  for (std::size_t m : h.members())
    if (G.element_order(m) == p) {
      seed = m;
      found = true;
      break;
    }
  if (!found) throw invariant_violation("Cauchy element of order p not found");
  std::size_t seed_arr[1] = {seed};
  Subgroup q = Subgroup::generated(G, seed_arr);

  while (static_cast<long long>(q.order()) < target) {
    auto n_members = detail::normalizer_members_within(G, h, q);
    bool extended = false;
    for (std::size_t y : n_members) {
      if (q.contains(y)) continue;
      std::size_t yp = y;
      for (long long k = 1; k < p; ++k) yp = G.mul(yp, y);
      if (!q.contains(yp)) continue;  // image in N/q not of order p
      std::vector<std::size_t> gens(q.members());
      gens.push_back(y);
      q = Subgroup::generated(G, gens);
      extended = true;
      break;
    }
    if (!extended) throw invariant_violation("Sylow ascent stalled below the p-part");
  }
  return q;
}

inline Subgroup sylow_subgroup(const FiniteGroup& G, long long p) {
  return sylow_in_subgroup(G, Subgroup::whole(G), p);
}

// O_p(h): the largest normal p-subgroup, as the intersection of the
// h-conjugates of one Sylow p-subgroup of h.
inline Subgroup p_core(const FiniteGroup& G, const Subgroup& h, long long p) {
  Subgroup s = sylow_in_subgroup(G, h, p);
  if (s.order() == 1) return s;
  Subgroup core = s;
  for (std::size_t g : h.members()) {
    if (core.order() == 1) break;
    core = subgroup_intersection(core, conjugate_subgroup(s, g));
  }
  return core;
}

// True iff p divides |h| and p does not divide |h ∩ h^g| for any g outside h.
inline bool is_strongly_p_embedded(const FiniteGroup& G, const Subgroup& h, long long p) {
  if (&h.parent() != &G) throw std::invalid_argument("subgroup belongs to a different group");
  if (h.order() % p != 0) return false;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (h.contains(g)) continue;
    Subgroup meet = subgroup_intersection(h, conjugate_subgroup(h, g));
    if (meet.order() % p == 0) return false;
  }
  return true;
}

// Short human-readable label: order plus generator cycles.
inline std::string subgroup_label(const Subgroup& h) {
  std::string s = "|" + std::to_string(h.order()) + "| <";
  bool first = true;
  for (std::size_t g : h.generator_witnesses()) {
    if (!first) s += ", ";
    s += format_cycles(h.parent().element(g));
    first = false;
  }
  return s + ">";
}

}  // namespace brownlab
