#pragma once

// Finite permutation groups with a canonically ordered element table.
// Elements are sorted lexicographically by image sequence; with that order
// the identity always lands at index 0. All downstream code works with
// element indices into this table.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brownlab/defs.hpp"
#include "brownlab/permutation.hpp"

namespace brownlab {

class FiniteGroup {
public:
  // Closure of gens (plus identity) under products.
  static FiniteGroup from_generators(std::vector<Permutation> gens,
                                     std::size_t max_order = kDefaultOrderCap) {
    if (gens.empty()) return from_elements({Permutation::identity(1)}, {});
    const int degree = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw std::invalid_argument("generators have mixed degrees");

    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, std::size_t> seen{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : gens) {
        Permutation prod = elems[i].then(g);
        if (seen.emplace(prod, elems.size()).second) {
          elems.push_back(std::move(prod));
          if (elems.size() > max_order)
            throw order_cap_exceeded("group order exceeds cap of " +
                                     std::to_string(max_order));
        }
      }
    }
    return from_elements(std::move(elems), std::move(gens));
  }

  // Element list already closed under the operation (sorted here).
  static FiniteGroup from_elements(std::vector<Permutation> elems,
                                   std::vector<Permutation> gens) {
    FiniteGroup g;
    std::sort(elems.begin(), elems.end());
    g.elements_ = std::move(elems);
    if (g.elements_.empty() || !g.elements_[0].is_identity())
      throw invariant_violation("canonical element order must start at the identity");
    for (const auto& p : gens) g.generators_.push_back(g.index_of(p));
    g.build_tables();
    return g;
  }

  int degree() const { return elements_.front().degree(); }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return 0; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
      throw std::invalid_argument("permutation is not a group element");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool contains(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    return it != elements_.end() && *it == p;
  }

  // element(i) followed by element(j).
  std::size_t mul(std::size_t i, std::size_t j) const {
    if (!mul_table_.empty()) return mul_table_[i * order() + j];
    return index_of(elements_[i].then(elements_[j]));
  }

  std::size_t inv(std::size_t i) const { return inv_table_[i]; }

  // Conjugate g^-1 * i * g (right conjugation action).
  std::size_t conj(std::size_t i, std::size_t g) const {
    return mul(mul(inv(g), i), g);
  }

  int element_order(std::size_t i) const { return element_order_[i]; }

private:
  void build_tables() {
    const std::size_t n = order();
    inv_table_.resize(n);
    element_order_.resize(n);
    // A full product table at the 20000-element cap would be ~1.6 GB, so it
    // is only cached for small groups; mul() falls back to composition.
    if (n <= 4096) {
      mul_table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          mul_table_[i * n + j] = static_cast<std::uint32_t>(index_of(elements_[i].then(elements_[j])));
    }
    for (std::size_t i = 0; i < n; ++i) inv_table_[i] = index_of(elements_[i].inverse());
    for (std::size_t i = 0; i < n; ++i) {
      int ord = 1;
      std::size_t x = i;
      while (x != 0) {
        x = mul(x, i);
        ++ord;
      }
      element_order_[i] = ord;
    }
  }

  std::vector<Permutation> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::size_t> inv_table_;
  std::vector<int> element_order_;
};

// --- named families ---------------------------------------------------

inline FiniteGroup cyclic_group(int n, std::size_t max_order = kDefaultOrderCap) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n == 1) return FiniteGroup::from_generators({}, max_order);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return FiniteGroup::from_generators({Permutation(std::move(im))}, max_order);
}

// Dihedral group named by its order 2n.
inline FiniteGroup dihedral_group(int order2n, std::size_t max_order = kDefaultOrderCap) {
  if (order2n < 2 || order2n % 2 != 0)
    throw std::invalid_argument("dihedral groups have even order >= 2");
  const int n = order2n / 2;
  if (n == 1) return cyclic_group(2, max_order);
  if (n == 2) {
    // Klein four needs 4 points for a faithful action.
    return FiniteGroup::from_generators(
        {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}, max_order);
  }
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::from_generators({Permutation(std::move(rot)), Permutation(std::move(refl))},
                                      max_order);
}

inline FiniteGroup symmetric_group(int n, std::size_t max_order = kDefaultOrderCap) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return FiniteGroup::from_generators({}, max_order);
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    tr[i] = i;
  }
  std::swap(tr[0], tr[1]);
  return FiniteGroup::from_generators({Permutation(std::move(tr)), Permutation(std::move(cyc))},
                                      max_order);
}

inline FiniteGroup alternating_group(int n, std::size_t max_order = kDefaultOrderCap) {
  if (n < 3) {
    if (n < 1) throw std::invalid_argument("alternating group needs n >= 1");
    return FiniteGroup::from_generators({}, max_order);
  }
  // Generated by the 3-cycles (1 2 k), k = 3..n.
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    im[0] = 1;
    im[1] = k;
    im[k] = 0;
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::from_generators(std::move(gens), max_order);
}

inline FiniteGroup quaternion_group8(std::size_t max_order = kDefaultOrderCap) {
  // Regular representation on the labels 1,i,j,k,-1,-i,-j,-k (points 1..8):
  // right multiplication by i and by j.
  auto a = parse_permutation("(1 2 5 6)(3 8 7 4)", 8);
  auto b = parse_permutation("(1 3 5 7)(2 4 6 8)", 8);
  return FiniteGroup::from_generators({a, b}, max_order);
}

// Product realized on the disjoint union of the factors' point sets.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::size_t max_order = kDefaultOrderCap) {
  const int da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  auto lift_a = [&](const Permutation& p) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = p.apply(i);
    for (int i = 0; i < db; ++i) im[da + i] = da + i;
    return Permutation(std::move(im));
  };
  auto lift_b = [&](const Permutation& p) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = i;
    for (int i = 0; i < db; ++i) im[da + i] = da + p.apply(i);
    return Permutation(std::move(im));
  };
  for (auto gi : a.generators()) gens.push_back(lift_a(a.element(gi)));
  for (auto gi : b.generators()) gens.push_back(lift_b(b.element(gi)));
  // Factors may be trivial (no generators); closure still yields the product.
  if (a.order() > 1 && a.generators().empty())
    for (std::size_t i = 1; i < a.order(); ++i) gens.push_back(lift_a(a.element(i)));
  if (b.order() > 1 && b.generators().empty())
    for (std::size_t i = 1; i < b.order(); ++i) gens.push_back(lift_b(b.element(i)));
  if (gens.empty()) return FiniteGroup::from_generators({}, max_order);
  return FiniteGroup::from_generators(std::move(gens), max_order);
}

}  // namespace brownlab
