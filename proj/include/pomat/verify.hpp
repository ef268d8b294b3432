#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/greedy.hpp"
#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/rational.hpp"
#include "pomat/simplicial.hpp"

namespace pomat {

struct OptimumReport {
  Rational optimum = 0;
  std::vector<GroundSubset> witnesses;  ///< in (cardinality, numeric) order
  std::size_t family_size = 0;
};

/// Exact maximum of w over all independent sets, by exhaustive scan.
inline OptimumReport brute_force_optimum(const PoIndependenceSystem& sys, const WeightFunction& w,
                                         std::size_t cap = kDefaultEnumerationCap, bool all_witnesses = true) {
  require_same_domain(sys.poset(), w);
  const MaterializedFamily fam = materialize(sys, cap);
  OptimumReport report;
  report.family_size = fam.sets.size();
  bool first = true;
  for (const auto& s : fam.sets) {
    const Rational value = w.total(s);
    if (first || value > report.optimum) {
      report.optimum = value;
      report.witnesses.assign(1, s);
      first = false;
    } else if (value == report.optimum && all_witnesses) {
      report.witnesses.push_back(s);
    }
  }
  return report;
}

struct ProbeResult {
  bool all_optimal = true;
  std::optional<std::size_t> failing_index;  ///< index into the supplied weights
  Rational gap = 0;                          ///< optimum - pgreedy total at the failure
};

/// Runs pgreedy against the brute-force optimum for each weight and stops at
/// the first weight where they differ.
inline ProbeResult greedy_correctness_probe(const PoIndependenceSystem& sys, const std::vector<WeightFunction>& weights,
                                            std::size_t cap = kDefaultEnumerationCap) {
  ProbeResult result;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const GreedyTrace trace = pgreedy(sys, weights[i]);
    const OptimumReport best = brute_force_optimum(sys, weights[i], cap, false);
    if (trace.total != best.optimum) {
      result.all_optimal = false;
      result.failing_index = i;
      result.gap = best.optimum - trace.total;
      return result;
    }
  }
  return result;
}

/// Denominator of the random rational bases; numerators are uniform in [0, 4 * denominator].
inline constexpr long long kRandomWeightDenominator = 64;

/// Monotone closure of uniform random rational bases.
template <typename Rng>
WeightFunction random_order_preserving_weight(const Poset& p, Rng& rng) {
  std::uniform_int_distribution<long long> numerator(0, 4 * kRandomWeightDenominator);
  std::vector<Rational> base;
  base.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) base.emplace_back(numerator(rng), kRandomWeightDenominator);
  return monotone_closure(p, WeightFunction(std::move(base)));
}

struct EquivalenceReport {
  std::string system_id;
  bool is_matroid = false;
  bool greedy_always_optimal = false;
  std::optional<Rational> adversarial_gap;
  std::optional<AxiomViolation> violation;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool theorem_violation = false;
  std::string detail;
};

/// Ties the axiom checker to greedy behaviour on one system.
///
/// Poset matroids are probed with `trials` seeded random order-preserving
/// weights, all of which must be solved optimally. Non-matroids must be
/// broken by the adversarial weight built from their first axiom (ii)
/// witness. Anything else is reported as a theorem violation.
inline EquivalenceReport edmonds_rado_check(const PoIndependenceSystem& sys, std::size_t trials, std::uint64_t seed,
                                            std::string system_id = {}, std::size_t cap = kDefaultEnumerationCap) {
  if (auto bad = check_hereditary(sys, cap))
    throw Error(Errc::NotHereditary, "system '" + system_id + "' is not closed under up-subsets");
  EquivalenceReport report;
  report.system_id = std::move(system_id);
  report.seed = seed;
  const auto witness = axiom_ii_witness(sys, cap);
  report.is_matroid = !witness.has_value();
  if (report.is_matroid) {
    std::mt19937_64 rng(seed);
    std::vector<WeightFunction> weights;
    weights.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) weights.push_back(random_order_preserving_weight(sys.poset(), rng));
    const ProbeResult probe = greedy_correctness_probe(sys, weights, cap);
    report.trials = trials;
    report.greedy_always_optimal = probe.all_optimal;
    if (!probe.all_optimal) {
      report.theorem_violation = true;
      report.detail = "pgreedy suboptimal on a poset matroid at trial " + std::to_string(*probe.failing_index) +
                      " (gap " + format_rational(probe.gap) + ")";
    }
  } else {
    report.violation = witness;
    const WeightFunction w = adversarial_weight(sys, *witness);
    const GreedyTrace trace = pgreedy(sys, w);
    const OptimumReport best = brute_force_optimum(sys, w, cap, false);
    report.adversarial_gap = best.optimum - trace.total;
    report.greedy_always_optimal = *report.adversarial_gap == 0;
    if (*report.adversarial_gap <= 0) {
      report.theorem_violation = true;
      report.detail = "adversarial weight failed to break pgreedy on a non-matroid";
    }
  }
  return report;
}

/// Seeded random poset: each pair of positions in a random permutation is
/// related with probability 1/3, then closed.
template <typename Rng>
Poset random_poset(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution related(1.0 / 3.0);
  std::vector<RelationPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (related(rng)) pairs.emplace_back(perm[i], perm[j]);
  return build_poset(default_labels(n), pairs);
}

/// The smallest up-set containing `s`.
inline GroundSubset up_closure(const Poset& p, const GroundSubset& s) {
  GroundSubset out = p.empty_subset();
  s.for_each([&](std::size_t x) { out |= p.up(x); });
  return out;
}

/// All up-sets of `p` contained in at least one generator.
inline std::vector<GroundSubset> down_closure(const Poset& p, const std::vector<GroundSubset>& generators,
                                              std::size_t cap = kDefaultEnumerationCap) {
  std::vector<GroundSubset> family;
  for (auto& u : enumerate_up_sets(p, cap)) {
    const bool below = std::any_of(generators.begin(), generators.end(),
                                   [&](const GroundSubset& g) { return u.is_subset_of(g); });
    if (below) family.push_back(std::move(u));
  }
  return family;
}

/// Random poset plus the hereditary family generated by `generator_count`
/// random up-sets. Deterministic per seed.
inline PoIndependenceSystem random_system(std::size_t poset_size, std::size_t generator_count, std::uint64_t seed,
                                          std::size_t cap = kDefaultEnumerationCap) {
  if (poset_size > cap)
    throw Error(Errc::GroundSetTooLarge, "random system of " + std::to_string(poset_size) + " elements exceeds cap");
  std::mt19937_64 rng(seed);
  Poset p = random_poset(poset_size, rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<GroundSubset> generators;
  for (std::size_t g = 0; g < generator_count; ++g) {
    GroundSubset s = p.empty_subset();
    for (std::size_t x = 0; x < poset_size; ++x)
      if (coin(rng)) s.insert(x);
    generators.push_back(up_closure(p, s));
  }
  auto family = down_closure(p, generators, cap);
  return PoIndependenceSystem::explicit_family(std::move(p), family);
}

/// Random facets of 1..max_facet_size distinct vertices over `vertex_count`
/// vertices. Deterministic per seed.
inline SimplicialComplex random_complex(std::size_t vertex_count, std::size_t facet_count,
                                        std::size_t max_facet_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t top = std::max<std::size_t>(1, std::min(max_facet_size, vertex_count));
  std::uniform_int_distribution<std::size_t> size_dist(1, top);
  std::vector<std::size_t> vertices(vertex_count);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<Face> facets;
  for (std::size_t i = 0; i < facet_count && vertex_count > 0; ++i) {
    std::shuffle(vertices.begin(), vertices.end(), rng);
    facets.emplace_back(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
  }
  return build_complex(vertex_count, facets);
}

/// Every labelled poset on n elements (n <= 4), ids 0..n-1.
inline std::vector<Poset> all_posets(std::size_t n) {
  std::vector<RelationPair> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) candidates.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<RelationPair> pairs;
    for (std::size_t b = 0; b < candidates.size(); ++b)
      if (mask >> b & 1u) pairs.push_back(candidates[b]);
    Poset p;
    try {
      p = build_poset(default_labels(n), pairs);
    } catch (const Error&) {
      continue;
    }
    // Keep only relations that were already closed, so each order appears once.
    std::size_t strict = 0;
    for (std::size_t x = 0; x < n; ++x) strict += p.up(x).count() - 1;
    if (strict == pairs.size()) out.push_back(std::move(p));
  }
  return out;
}

/// Every hereditary family of up-sets of `p`, one per nonempty antichain of
/// the up-set lattice (the family's maximal members).
inline std::vector<std::vector<GroundSubset>> all_hereditary_families(const Poset& p) {
  const auto ups = enumerate_up_sets(p, kDefaultEnumerationCap);
  if (ups.size() > 20) throw Error(Errc::GroundSetTooLarge, "too many up-sets for exhaustive family enumeration");
  std::vector<std::vector<GroundSubset>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ups.size()); ++mask) {
    std::vector<GroundSubset> gens;
    bool antichain = true;
    for (std::size_t i = 0; i < ups.size() && antichain; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (const auto& g : gens)
        if (g.is_subset_of(ups[i]) || ups[i].is_subset_of(g)) antichain = false;
      gens.push_back(ups[i]);
    }
    if (antichain) out.push_back(down_closure(p, gens));
  }
  return out;
}

/// Two overlapping h-cycles inside a full (h+1)-skeleton.
struct CyclePair {
  std::shared_ptr<const SimplicialComplex> ambient;
  HCycleWitness first;
  HCycleWitness second;
};

/// Pairs (D, <F>) where D is an iterated symmetric difference of boundaries
/// of (h+1)-faces and F is an (h+1)-face whose boundary meets D. Ambient
/// complexes are full (h+1)-skeleta on h+2 .. h+4 vertices. A walk restarts
/// from a fresh boundary whenever the next iterate is not an h-cycle.
inline std::vector<CyclePair> overlapping_cycle_pairs(std::size_t count, std::size_t h, std::uint64_t seed,
                                                      std::size_t walk_length = 8) {
  if (h < 2) throw Error(Errc::BadH, "h-cycles are defined for h >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vertex_dist(h + 2, h + 4);
  std::vector<CyclePair> out;
  while (out.size() < count) {
    const std::size_t nv = vertex_dist(rng);
    std::vector<Face> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != h + 1) continue;
      Face f;
      for (std::size_t v = 0; v < nv; ++v)
        if (mask >> v & 1u) f.push_back(v);
      facets.push_back(f);
    }
    auto ambient = std::make_shared<const SimplicialComplex>(build_complex(nv, facets));
    const auto tops = ambient->faces_of_size(h + 1);
    std::uniform_int_distribution<std::size_t> pick(0, tops.size() - 1);
    HCycleWitness current = boundary_cycle(*ambient, tops[pick(rng)]);
    for (std::size_t step = 0; step < walk_length && out.size() < count; ++step) {
      std::vector<HCycleWitness> adjacent;
      for (auto t : tops) {
        HCycleWitness b = boundary_cycle(*ambient, t);
        std::vector<std::size_t> common;
        std::set_intersection(b.members.begin(), b.members.end(), current.members.begin(), current.members.end(),
                              std::back_inserter(common));
        if (!common.empty() && b != current) adjacent.push_back(std::move(b));
      }
      if (adjacent.empty()) break;
      std::uniform_int_distribution<std::size_t> pick_adj(0, adjacent.size() - 1);
      HCycleWitness next = adjacent[pick_adj(rng)];
      out.push_back({ambient, current, next});
      auto diff = symmetric_difference(current, next);
      if (!is_h_cycle(*ambient, diff, h)) break;
      current = HCycleWitness{h, std::move(diff)};
    }
  }
  return out;
}

}  // namespace pomat
