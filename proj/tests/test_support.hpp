#pragma once

// Small fixtures and brute-force oracles shared by the test binaries. None of
// these call into the routines they are used to check.

#include <cstdint>
#include <vector>

#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/simplicial.hpp"

namespace pomat::testing {

/// 0 < {a, b} < 1 with ids 0, a=1, b=2, 1=3.
inline Poset diamond() {
  return build_poset({"0", "a", "b", "1"}, std::vector<RelationPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

/// All subsets of an at-most-64 element poset that pass the up-set definition
/// pairwise, scanning every mask.
inline std::vector<GroundSubset> brute_force_up_sets(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<GroundSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if ((mask >> x & 1u) && p.leq(x, y) && !(mask >> y & 1u)) ok = false;
    if (ok) out.push_back(GroundSubset::from_mask(n, mask));
  }
  return out;
}

/// Antichain {a, b, c} with family = down-closure of {{a, b}, {c}}.
inline PoIndependenceSystem antichain_non_matroid() {
  Poset p = make_antichain({"a", "b", "c"});
  return PoIndependenceSystem::explicit_family(p, {p.subset({0}), p.subset({1}), p.subset({0, 1}), p.subset({2})});
}

/// Every up-set of `p` is independent.
inline PoIndependenceSystem free_system(const Poset& p) {
  return PoIndependenceSystem::explicit_family(p, brute_force_up_sets(p));
}

/// Graphic matroid of the triangle K3 over edges e1, e2, e3: every set of at
/// most two edges is a forest.
inline PoIndependenceSystem triangle_graphic() {
  Poset p = make_antichain({"e1", "e2", "e3"});
  return PoIndependenceSystem::explicit_family(
      p, {p.subset({0}), p.subset({1}), p.subset({2}), p.subset({0, 1}), p.subset({0, 2}), p.subset({1, 2})});
}

/// Exhaustive maximum of w over a materialized family, by summing weights of
/// listed members directly.
inline Rational subset_scan_optimum(const PoIndependenceSystem& sys, const WeightFunction& w) {
  const std::size_t n = sys.poset().size();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const GroundSubset s = GroundSubset::from_mask(n, mask);
    if (!is_independent(sys, s)) continue;
    Rational total = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1u) total += w[x];
    if (total > best) best = total;
  }
  return best;
}

/// Union-find maximum spanning forest weight over (u, v, weight) edges.
struct WeightedEdge {
  std::size_t u, v;
  Rational weight;
};

inline Rational kruskal_max_forest(std::size_t vertex_count, std::vector<WeightedEdge> edges) {
  std::vector<std::size_t> parent(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
  Rational total = 0;
  for (const auto& e : edges) {
    auto ru = root(e.u), rv = root(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    total += e.weight;
  }
  return total;
}

}  // namespace pomat::testing
