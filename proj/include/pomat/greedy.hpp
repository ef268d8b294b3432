#pragma once

#include <cstddef>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/rational.hpp"

namespace pomat {

enum class StepReason { Accepted, RejectedDependent };

struct GreedyStep {
  std::size_t element = 0;
  Rational weight;
  bool accepted = false;
  StepReason reason = StepReason::RejectedDependent;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

/// Decision log of one greedy run. Every ground element appears exactly once.
struct GreedyTrace {
  std::vector<GreedyStep> steps;
  GroundSubset result;
  Rational total = 0;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

/// Which element wins among equal-weight candidates.
enum class TieBreak { SmallestId, LargestId };

struct GreedyOptions {
  TieBreak tie_break = TieBreak::SmallestId;
  /// Skips the order-preservation check. Results are then outside the
  /// correctness guarantee.
  bool unchecked_weights = false;
};

namespace detail {

inline std::size_t pick_heaviest(const GroundSubset& candidates, const WeightFunction& w, TieBreak tie) {
  std::size_t best = candidates.ground_size();
  candidates.for_each([&](std::size_t x) {
    if (best == candidates.ground_size() || w[x] > w[best] || (tie == TieBreak::LargestId && w[x] == w[best]))
      best = x;
  });
  return best;
}

// Shared loop: `candidates(remaining)` yields the elements eligible this step.
template <typename Candidates>
GreedyTrace run_greedy(const PoIndependenceSystem& sys, const WeightFunction& w, TieBreak tie,
                       Candidates&& candidates) {
  const Poset& p = sys.poset();
  GreedyTrace trace;
  trace.result = p.empty_subset();
  GroundSubset remaining = p.full_subset();
  while (!remaining.empty()) {
    const std::size_t m = pick_heaviest(candidates(remaining), w, tie);
    remaining.erase(m);
    const GroundSubset grown = trace.result.with(m);
    const bool ok = is_independent(sys, grown);
    if (ok) {
      trace.result = grown;
      trace.total += w[m];
    }
    trace.steps.push_back({m, w[m], ok, ok ? StepReason::Accepted : StepReason::RejectedDependent});
  }
  return trace;
}

}  // namespace detail

/// PGREEDY: repeatedly take a maximum-weight element among the maximal
/// elements of the remaining set Q, and keep it iff S ∪ {m} is independent.
inline GreedyTrace pgreedy(const PoIndependenceSystem& sys, const WeightFunction& w, const GreedyOptions& opts = {}) {
  const Poset& p = sys.poset();
  require_same_domain(p, w);
  if (!opts.unchecked_weights && !is_order_preserving(p, w))
    throw Error(Errc::WeightNotOrderPreserving, "pgreedy requires an order-preserving weight");
  return detail::run_greedy(sys, w, opts.tie_break,
                            [&](const GroundSubset& q) { return max_elements(p, q); });
}

/// Classic GREEDY on an independence system (antichain poset).
inline GreedyTrace greedy(const PoIndependenceSystem& sys, const WeightFunction& w, const GreedyOptions& opts = {}) {
  const Poset& p = sys.poset();
  require_same_domain(p, w);
  if (!p.is_antichain()) throw Error(Errc::NotAnAntichain, "greedy requires an antichain ground poset");
  return detail::run_greedy(sys, w, opts.tie_break, [](const GroundSubset& q) { return q; });
}

}  // namespace pomat
