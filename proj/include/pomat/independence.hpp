#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/poset.hpp"
#include "pomat/rational.hpp"
#include "pomat/subset.hpp"

namespace pomat {

using SubsetSet = std::unordered_set<GroundSubset, GroundSubsetHash>;

/// A poset together with a family of independent up-sets, given either as an
/// explicit list or as a membership predicate.
///
/// Explicit families always contain ∅ (it is implied and added on
/// construction); every listed member must be an up-set. Oracle predicates
/// must accept ∅, be pure, and are only ever consulted on up-sets.
class PoIndependenceSystem {
 public:
  using Oracle = std::function<bool(const GroundSubset&)>;

  static PoIndependenceSystem explicit_family(Poset poset, const std::vector<GroundSubset>& members) {
    PoIndependenceSystem sys;
    sys.poset_ = std::make_shared<const Poset>(std::move(poset));
    const Poset& p = *sys.poset_;
    sys.lookup_.insert(p.empty_subset());
    for (const auto& m : members) {
      require_same_domain(p, m);
      if (!is_up_set(p, m)) throw Error(Errc::NotAnUpSet, "family member is not an up-set");
      sys.lookup_.insert(m);
    }
    sys.members_.assign(sys.lookup_.begin(), sys.lookup_.end());
    std::sort(sys.members_.begin(), sys.members_.end(), size_then_value_less);
    return sys;
  }

  static PoIndependenceSystem from_oracle(Poset poset, Oracle oracle) {
    PoIndependenceSystem sys;
    sys.poset_ = std::make_shared<const Poset>(std::move(poset));
    sys.oracle_ = std::move(oracle);
    if (!sys.oracle_ || !sys.oracle_(sys.poset_->empty_subset()))
      throw Error(Errc::EmptySetRejected, "independence oracle must accept the empty set");
    return sys;
  }

  const Poset& poset() const noexcept { return *poset_; }
  bool is_explicit() const noexcept { return !oracle_; }

  /// Members of an explicit family, sorted by (cardinality, numeric order).
  const std::vector<GroundSubset>& members() const noexcept { return members_; }

  /// Family membership; callers guarantee `s` is an up-set.
  bool accepts(const GroundSubset& s) const {
    if (oracle_) return oracle_(s);
    return lookup_.count(s) != 0;
  }

 private:
  PoIndependenceSystem() = default;

  std::shared_ptr<const Poset> poset_;
  std::vector<GroundSubset> members_;
  SubsetSet lookup_;
  Oracle oracle_;
};

/// True iff `s` is an up-set and belongs to the family. Non-up-sets are
/// rejected without consulting an oracle.
inline bool is_independent(const PoIndependenceSystem& sys, const GroundSubset& s) {
  return is_up_set(sys.poset(), s) && sys.accepts(s);
}

/// The whole family as a sorted list plus a hash set for membership tests.
struct MaterializedFamily {
  std::vector<GroundSubset> sets;
  SubsetSet lookup;

  bool contains(const GroundSubset& s) const { return lookup.count(s) != 0; }
};

/// Explicit families are returned as-is; oracle families are obtained by
/// filtering enumerate_up_sets(). Both are refused above `cap` elements.
inline MaterializedFamily materialize(const PoIndependenceSystem& sys, std::size_t cap = kDefaultEnumerationCap) {
  if (sys.poset().size() > cap)
    throw Error(Errc::GroundSetTooLarge, "ground set of " + std::to_string(sys.poset().size()) +
                                             " elements exceeds the enumeration cap of " + std::to_string(cap));
  MaterializedFamily fam;
  if (sys.is_explicit()) {
    fam.sets = sys.members();
  } else {
    for (auto& s : enumerate_up_sets(sys.poset(), cap))
      if (sys.accepts(s)) fam.sets.push_back(std::move(s));
    std::sort(fam.sets.begin(), fam.sets.end(), size_then_value_less);
  }
  fam.lookup.insert(fam.sets.begin(), fam.sets.end());
  return fam;
}

struct HereditaryViolation {
  GroundSubset smaller;  ///< an up-set missing from the family
  GroundSubset larger;   ///< a family member containing it
};

/// Checks axiom (i). Between two up-sets X ⊆ Y there is always a chain that
/// removes one minimal element of Y at a time, so it suffices to test each
/// member against its one-step-smaller up-sets.
inline std::optional<HereditaryViolation> check_hereditary(const PoIndependenceSystem& sys,
                                                           std::size_t cap = kDefaultEnumerationCap) {
  const Poset& p = sys.poset();
  const MaterializedFamily fam = materialize(sys, cap);
  if (!fam.contains(p.empty_subset())) return HereditaryViolation{p.empty_subset(), fam.sets.front()};
  for (const auto& y : fam.sets) {
    std::vector<GroundSubset> smaller;
    min_elements(p, y).for_each([&](std::size_t m) { smaller.push_back(y.without(m)); });
    std::sort(smaller.begin(), smaller.end(), [](const auto& a, const auto& b) { return numeric_compare(a, b) < 0; });
    for (const auto& x : smaller)
      if (!fam.contains(x)) return HereditaryViolation{x, y};
  }
  return std::nullopt;
}

/// A failure of the augmentation axiom: |B| = |A| + 1 and no maximal element
/// of B \ A extends A to an independent set.
struct AxiomViolation {
  GroundSubset a;
  GroundSubset b;
  std::size_t k = 0;  ///< |A|
  std::size_t t = 0;  ///< |A ∩ B|

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

namespace detail {

template <typename Member>
bool augments(const Poset& p, const GroundSubset& x, const GroundSubset& y, Member&& member) {
  bool found = false;
  max_elements(p, y - x).for_each([&](std::size_t m) {
    if (!found && member(x.with(m))) found = true;
  });
  return found;
}

}  // namespace detail

/// Validates (A, B) as an adjacent-size violation; throws NotAViolation otherwise.
inline AxiomViolation make_violation(const PoIndependenceSystem& sys, const GroundSubset& a, const GroundSubset& b) {
  const Poset& p = sys.poset();
  if (!is_independent(sys, a) || !is_independent(sys, b))
    throw Error(Errc::NotAViolation, "both sets of a violation must be independent");
  if (b.count() != a.count() + 1) throw Error(Errc::NotAViolation, "violation requires |B| = |A| + 1");
  if (detail::augments(p, a, b, [&](const GroundSubset& s) { return is_independent(sys, s); }))
    throw Error(Errc::NotAViolation, "some maximal element of B \\ A augments A");
  AxiomViolation v{a, b, a.count(), (a & b).count()};
  if (v.k <= v.t) throw Error(Errc::NotAViolation, "violation must have |A| > |A ∩ B|");
  return v;
}

namespace detail {

// Shrinks Y toward X by dropping minimal elements of Y \ X. Such an element
// is minimal in Y (X is an up-set), so Y stays an up-set and independent, and
// Max(Y \ X) only loses the removed element, so the violation survives.
inline AxiomViolation normalize_violation(const PoIndependenceSystem& sys, const GroundSubset& x, GroundSubset y) {
  const Poset& p = sys.poset();
  while (y.count() > x.count() + 1) y.erase(min_elements(p, y - x).first());
  return make_violation(sys, x, y);
}

inline std::vector<std::size_t> size_offsets(const std::vector<GroundSubset>& sorted, std::size_t n) {
  std::vector<std::size_t> start(n + 3, sorted.size());
  for (std::size_t i = sorted.size(); i-- > 0;) start[sorted[i].count()] = i;
  for (std::size_t c = n + 2; c-- > 0;) start[c] = std::min(start[c], start[c + 1]);
  return start;
}

}  // namespace detail

/// Axiom (ii): first pair (X, Y) of independent sets with |X| < |Y| such that
/// no y in Max(Y \ X) augments X, scanned in (|X|, numeric) then (|Y|, numeric)
/// order, normalized to |B| = |A| + 1.
inline std::optional<AxiomViolation> axiom_ii_witness(const PoIndependenceSystem& sys,
                                                      std::size_t cap = kDefaultEnumerationCap) {
  const Poset& p = sys.poset();
  const MaterializedFamily fam = materialize(sys, cap);
  const auto start = detail::size_offsets(fam.sets, p.size());
  auto member = [&](const GroundSubset& s) { return fam.contains(s); };
  for (const auto& x : fam.sets) {
    for (std::size_t j = start[x.count() + 1]; j < fam.sets.size(); ++j) {
      const auto& y = fam.sets[j];
      if (!detail::augments(p, x, y, member)) return detail::normalize_violation(sys, x, y);
    }
  }
  return std::nullopt;
}

/// Local axiom (ii'): the scan is restricted to |Y| = |X| + 1 and |X ∩ Y| = |X| - 1.
inline std::optional<AxiomViolation> axiom_ii_prime_witness(const PoIndependenceSystem& sys,
                                                            std::size_t cap = kDefaultEnumerationCap) {
  const Poset& p = sys.poset();
  const MaterializedFamily fam = materialize(sys, cap);
  const auto start = detail::size_offsets(fam.sets, p.size());
  auto member = [&](const GroundSubset& s) { return fam.contains(s); };
  for (const auto& x : fam.sets) {
    const std::size_t k = x.count();
    if (k == 0) continue;
    for (std::size_t j = start[k + 1]; j < start[k + 2]; ++j) {
      const auto& y = fam.sets[j];
      if ((x & y).count() + 1 != k) continue;
      if (!detail::augments(p, x, y, member)) return make_violation(sys, x, y);
    }
  }
  return std::nullopt;
}

inline bool is_poset_matroid(const PoIndependenceSystem& sys, std::size_t cap = kDefaultEnumerationCap) {
  return !check_hereditary(sys, cap) && !axiom_ii_witness(sys, cap);
}

/// The greedy-breaking weight: α on A, 1 on B \ A, 0 elsewhere, with
/// α = 1 + 1/(2(k - t)), the midpoint of the window (1, 1 + 1/(k - t)).
inline WeightFunction adversarial_weight(const PoIndependenceSystem& sys, const AxiomViolation& v) {
  const AxiomViolation checked = make_violation(sys, v.a, v.b);
  if (checked != v) throw Error(Errc::NotAViolation, "violation sizes k, t do not match A and B");
  const Rational alpha = 1 + Rational(1, 2 * static_cast<long long>(v.k - v.t));
  std::vector<Rational> values(sys.poset().size());
  (v.b - v.a).for_each([&](std::size_t x) { values[x] = 1; });
  v.a.for_each([&](std::size_t x) { values[x] = alpha; });
  return WeightFunction(std::move(values));
}

}  // namespace pomat
