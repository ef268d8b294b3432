#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/rational.hpp"
#include "pomat/subset.hpp"

namespace pomat {

/// Ground sets larger than this are refused by the exhaustive routines
/// unless a caller passes a larger cap explicitly.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

using RelationPair = std::pair<std::size_t, std::size_t>;

/// A finite poset on dense ids 0..n-1 with the order stored in closed form.
///
/// `up(x)` is {y : x <= y} and `down(x)` is {y : y <= x}; both include x.
/// Instances are immutable once built; use build_poset() to construct one.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(std::size_t x, std::size_t y) const { return up_.at(x).contains(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  const GroundSubset& up(std::size_t x) const { return up_.at(x); }
  const GroundSubset& down(std::size_t x) const { return down_.at(x); }

  GroundSubset empty_subset() const { return GroundSubset(size()); }
  GroundSubset full_subset() const { return GroundSubset::full(size()); }

  GroundSubset subset(std::initializer_list<std::size_t> members) const {
    return GroundSubset(size(), members);
  }

  /// Cover pairs (x, y): x < y with nothing strictly between, sorted.
  std::vector<RelationPair> covers() const {
    std::vector<RelationPair> out;
    for (std::size_t x = 0; x < size(); ++x) {
      GroundSubset strict = up_[x].without(x);
      GroundSubset above_strict = empty_subset();
      strict.for_each([&](std::size_t z) { above_strict |= up_[z].without(z); });
      (strict - above_strict).for_each([&](std::size_t y) { out.emplace_back(x, y); });
    }
    return out;
  }

  bool is_antichain() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (up_[x].count() != 1) return false;
    return true;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  friend Poset build_poset(std::vector<std::string>, const std::vector<RelationPair>&);
  friend Poset dual(const Poset&);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<GroundSubset> up_;
  std::vector<GroundSubset> down_;
};

/// Builds the reflexive-transitive closure of `pairs` (x <= y) over `labels`.
/// Throws CycleDetected if the closure is not antisymmetric.
inline Poset build_poset(std::vector<std::string> labels, const std::vector<RelationPair>& pairs) {
  const std::size_t n = labels.size();
  Poset p;
  p.up_.assign(n, GroundSubset(n));
  for (std::size_t x = 0; x < n; ++x) p.up_[x].insert(x);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw Error(Errc::UnknownElement, "relation pair references id outside 0.." + std::to_string(n));
    p.up_[x].insert(y);
  }
  // Warshall on bitset rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].contains(k)) p.up_[i] |= p.up_[k];

  p.down_.assign(n, GroundSubset(n));
  for (std::size_t x = 0; x < n; ++x) {
    p.up_[x].for_each([&](std::size_t y) {
      if (y != x && p.up_[y].contains(x))
        throw Error(Errc::CycleDetected, "order relation has a cycle through ids " + std::to_string(x) +
                                             " and " + std::to_string(y));
      p.down_[y].insert(x);
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.index_.emplace(labels[x], x).second)
      throw Error(Errc::BadDocument, "duplicate element label '" + labels[x] + "'");
  }
  p.labels_ = std::move(labels);
  return p;
}

/// Label-based overload; pairs naming undeclared labels raise UnknownElement.
inline Poset build_poset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<RelationPair> ids;
  ids.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error(Errc::UnknownElement, "unknown element '" + a + "'");
    if (ib == index.end()) throw Error(Errc::UnknownElement, "unknown element '" + b + "'");
    ids.emplace_back(ia->second, ib->second);
  }
  return build_poset(std::move(labels), ids);
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

inline Poset make_antichain(std::vector<std::string> labels) { return build_poset(std::move(labels), std::vector<RelationPair>{}); }

/// Chain labels[0] < labels[1] < ...
inline Poset make_chain(std::vector<std::string> labels) {
  std::vector<RelationPair> pairs;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) pairs.emplace_back(i, i + 1);
  return build_poset(std::move(labels), pairs);
}

inline Poset dual(const Poset& p) {
  Poset d = p;
  std::swap(d.up_, d.down_);
  return d;
}

inline void require_same_domain(const Poset& p, const GroundSubset& s) {
  if (s.ground_size() != p.size())
    throw Error(Errc::DomainMismatch, "subset over " + std::to_string(s.ground_size()) +
                                          " elements used with poset of " + std::to_string(p.size()));
}

inline bool is_up_set(const Poset& p, const GroundSubset& s) {
  require_same_domain(p, s);
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && p.up(x).is_subset_of(s); });
  return ok;
}

inline bool is_down_set(const Poset& p, const GroundSubset& s) {
  require_same_domain(p, s);
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && p.down(x).is_subset_of(s); });
  return ok;
}

/// { x in s : no y in s with x < y }
inline GroundSubset max_elements(const Poset& p, const GroundSubset& s) {
  require_same_domain(p, s);
  GroundSubset out = p.empty_subset();
  s.for_each([&](std::size_t x) {
    if ((p.up(x) & s).count() == 1) out.insert(x);
  });
  return out;
}

/// { x in s : no y in s with y < x }
inline GroundSubset min_elements(const Poset& p, const GroundSubset& s) {
  require_same_domain(p, s);
  GroundSubset out = p.empty_subset();
  s.for_each([&](std::size_t x) {
    if ((p.down(x) & s).count() == 1) out.insert(x);
  });
  return out;
}

/// Nonnegative exact weights, one per ground element.
class WeightFunction {
 public:
  WeightFunction() = default;

  explicit WeightFunction(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] < 0)
        throw Error(Errc::NegativeWeight, "weight of element " + std::to_string(i) + " is negative");
  }

  static WeightFunction zero(std::size_t n) { return WeightFunction(std::vector<Rational>(n)); }

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t x) const { return values_.at(x); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  Rational total(const GroundSubset& s) const {
    Rational sum = 0;
    s.for_each([&](std::size_t x) { sum += values_.at(x); });
    return sum;
  }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<Rational> values_;
};

inline void require_same_domain(const Poset& p, const WeightFunction& w) {
  if (w.size() != p.size())
    throw Error(Errc::DomainMismatch, "weight over " + std::to_string(w.size()) +
                                          " elements used with poset of " + std::to_string(p.size()));
}

inline bool is_order_preserving(const Poset& p, const WeightFunction& w) {
  require_same_domain(p, w);
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool ok = true;
    p.up(x).for_each([&](std::size_t y) { ok = ok && w[x] <= w[y]; });
    if (!ok) return false;
  }
  return true;
}

/// Ids ordered so that every element comes after everything below it.
inline std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down(a).count() < p.down(b).count();
  });
  return order;
}

/// Smallest order-preserving weight that dominates `base` pointwise.
inline WeightFunction monotone_closure(const Poset& p, const WeightFunction& base) {
  require_same_domain(p, base);
  std::vector<Rational> out = base.values();
  for (std::size_t x : linear_extension(p)) {
    p.down(x).for_each([&](std::size_t y) {
      if (out[y] > out[x]) out[x] = out[y];
    });
  }
  return WeightFunction(std::move(out));
}

/// All up-sets of `p`, in a deterministic order, ∅ and the full set included.
///
/// Branches on the smallest-id maximal undecided element: including it keeps
/// the partial set an up-set, excluding it forces every element below it out.
/// Every leaf is a distinct up-set, so the count equals the number of antichains.
inline std::vector<GroundSubset> enumerate_up_sets(const Poset& p, std::size_t cap = kDefaultEnumerationCap) {
  if (p.size() > cap)
    throw Error(Errc::GroundSetTooLarge, "cannot enumerate up-sets of " + std::to_string(p.size()) +
                                             " elements (cap " + std::to_string(cap) + ")");
  std::vector<GroundSubset> out;
  struct Frame {
    GroundSubset undecided;
    GroundSubset chosen;
  };
  std::vector<Frame> stack{{p.full_subset(), p.empty_subset()}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.undecided.empty()) {
      out.push_back(f.chosen);
      continue;
    }
    const std::size_t m = max_elements(p, f.undecided).first();
    // Pushed in reverse so the include branch is explored first.
    stack.push_back({f.undecided - p.down(m), f.chosen});
    stack.push_back({f.undecided.without(m), f.chosen.with(m)});
  }
  return out;
}

}  // namespace pomat
