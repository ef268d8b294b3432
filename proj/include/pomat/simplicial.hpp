#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/greedy.hpp"
#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/subset.hpp"

namespace pomat {

/// Sorted vertex ids.
using Face = std::vector<std::size_t>;

/// A finite abstract simplicial complex. The empty face is not stored, and a
/// face of cardinality i has dimension i.
///
/// Faces get dense ids ordered by (cardinality, lexicographic vertex ids);
/// these ids are also the element ids of face_poset().
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }

  std::size_t face_count() const noexcept { return faces_.size(); }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  std::optional<std::size_t> face_id(const Face& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Largest face cardinality (0 for the empty complex).
  std::size_t dimension() const noexcept { return faces_.empty() ? 0 : faces_.back().size(); }

  /// Ids of the faces of cardinality `i`, ascending.
  std::vector<std::size_t> faces_of_size(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t id = 0; id < faces_.size(); ++id)
      if (faces_[id].size() == i) out.push_back(id);
    return out;
  }

  /// Comma-joined vertex labels in vertex id order, e.g. "1,2".
  std::string face_label(std::size_t id) const {
    std::string out;
    for (std::size_t v : faces_.at(id)) {
      if (!out.empty()) out += ',';
      out += vertex_labels_[v];
    }
    return out;
  }

  /// The containment-dual order: F <= G iff G ⊆ F. Up-sets are subcomplexes.
  const Poset& face_poset() const { return *poset_; }

  GroundSubset subset_of(const std::vector<std::size_t>& face_ids) const {
    GroundSubset s(face_count());
    for (auto id : face_ids) s.insert(id);
    return s;
  }

  /// The ids of all vertex faces.
  GroundSubset vertex_faces() const { return subset_of(faces_of_size(1)); }

 private:
  friend SimplicialComplex build_complex(std::vector<std::string>, const std::vector<Face>&);

  std::vector<std::string> vertex_labels_;
  std::vector<Face> faces_;
  std::map<Face, std::size_t> index_;
  std::shared_ptr<const Poset> poset_;
};

namespace detail {

inline void for_each_nonempty_subface(const Face& f, const std::function<void(const Face&)>& fn) {
  const std::size_t n = f.size();
  Face sub;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(f[i]);
    fn(sub);
  }
}

inline bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace detail

/// Downward closure of `facets` over the given vertices. Every listed vertex
/// is itself a face, so isolated vertices are allowed.
inline SimplicialComplex build_complex(std::vector<std::string> vertex_labels, const std::vector<Face>& facets) {
  const std::size_t nv = vertex_labels.size();
  std::vector<Face> all;
  for (std::size_t v = 0; v < nv; ++v) all.push_back({v});
  for (Face f : facets) {
    if (f.empty()) throw Error(Errc::EmptyFacet, "facets must be nonempty");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (auto v : f)
      if (v >= nv) throw Error(Errc::UnknownElement, "facet references vertex id " + std::to_string(v));
    if (f.size() > 9)
      throw Error(Errc::GroundSetTooLarge, "facet of " + std::to_string(f.size()) + " vertices has too many faces");
    detail::for_each_nonempty_subface(f, [&](const Face& s) { all.push_back(s); });
  }
  std::sort(all.begin(), all.end(), detail::face_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > kMaxGroundSize)
    throw Error(Errc::GroundSetTooLarge, "complex has " + std::to_string(all.size()) + " faces");

  SimplicialComplex c;
  c.vertex_labels_ = std::move(vertex_labels);
  c.faces_ = std::move(all);
  for (std::size_t id = 0; id < c.faces_.size(); ++id) c.index_.emplace(c.faces_[id], id);

  std::vector<RelationPair> pairs;
  std::vector<std::string> labels;
  for (std::size_t id = 0; id < c.faces_.size(); ++id) {
    labels.push_back(c.face_label(id));
    detail::for_each_nonempty_subface(c.faces_[id], [&](const Face& s) {
      if (s.size() < c.faces_[id].size()) pairs.emplace_back(id, c.index_.at(s));
    });
  }
  c.poset_ = std::make_shared<const Poset>(build_poset(std::move(labels), pairs));
  return c;
}

/// Convenience overload with vertices labelled "0", "1", ...
inline SimplicialComplex build_complex(std::size_t vertex_count, const std::vector<Face>& facets) {
  return build_complex(default_labels(vertex_count), facets);
}

inline bool is_subcomplex(const SimplicialComplex& c, const GroundSubset& faces) {
  return is_up_set(c.face_poset(), faces);
}

inline bool is_spanning(const SimplicialComplex& c, const GroundSubset& faces) {
  return c.vertex_faces().is_subset_of(faces);
}

/// A set of cardinality-h faces, as sorted face ids of some complex.
struct HCycleWitness {
  std::size_t h = 0;
  std::vector<std::size_t> members;

  friend bool operator==(const HCycleWitness&, const HCycleWitness&) = default;
};

/// Checks the defining condition directly: every member has cardinality h,
/// and for every member F and x in F exactly one member H has F ∩ H = F \ {x}.
inline bool is_h_cycle(const SimplicialComplex& c, const std::vector<std::size_t>& members, std::size_t h) {
  if (h < 2 || h > c.dimension() || members.empty()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= c.face_count() || c.face(members[i]).size() != h) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (members[i] == members[j]) return false;
  }
  Face common;
  for (auto fid : members) {
    const Face& f = c.face(fid);
    for (std::size_t x : f) {
      Face ridge;
      for (auto v : f)
        if (v != x) ridge.push_back(v);
      std::size_t partners = 0;
      for (auto hid : members) {
        const Face& g = c.face(hid);
        common.clear();
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(common));
        if (common == ridge) ++partners;
      }
      if (partners != 1) return false;
    }
  }
  return true;
}

/// <F>: all cardinality-(|F|-1) subfaces of F.
inline HCycleWitness boundary_cycle(const SimplicialComplex& c, std::size_t face) {
  if (face >= c.face_count()) throw Error(Errc::NotAFace, "face id " + std::to_string(face) + " not in complex");
  const Face& f = c.face(face);
  if (f.size() < 3)
    throw Error(Errc::DimensionTooSmall, "boundary cycle needs a face of cardinality at least 3");
  HCycleWitness w{f.size() - 1, {}};
  for (std::size_t skip = 0; skip < f.size(); ++skip) {
    Face sub;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != skip) sub.push_back(f[i]);
    w.members.push_back(c.face_id(sub).value());
  }
  std::sort(w.members.begin(), w.members.end());
  return w;
}

inline HCycleWitness boundary_cycle(const SimplicialComplex& c, Face vertices) {
  std::sort(vertices.begin(), vertices.end());
  auto id = c.face_id(vertices);
  if (!id) throw Error(Errc::NotAFace, "vertex set is not a face of the complex");
  return boundary_cycle(c, *id);
}

/// True iff the mod-2 boundary of `members` vanishes, i.e. every ridge is
/// covered an even number of times.
inline bool in_boundary_kernel(const SimplicialComplex& c, const std::vector<std::size_t>& members) {
  std::map<Face, std::size_t> degree;
  for (auto fid : members) {
    const Face& f = c.face(fid);
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face r;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != skip) r.push_back(f[i]);
      ++degree[r];
    }
  }
  return std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

namespace detail {

// Incidence between the h-faces of a face set and their ridges, with the
// exact-degree backtracking search for h-cycles.
class CycleSearch {
 public:
  CycleSearch(const SimplicialComplex& c, const GroundSubset& faces, std::size_t h) : c_(c), h_(h) {
    faces.for_each([&](std::size_t id) {
      if (c.face(id).size() == h) hfaces_.push_back(id);
    });
    local_.assign(c.face_count(), kNone);
    for (std::size_t i = 0; i < hfaces_.size(); ++i) local_[hfaces_[i]] = i;
    ridges_.resize(hfaces_.size());
    for (std::size_t i = 0; i < hfaces_.size(); ++i) {
      const Face& f = c.face(hfaces_[i]);
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face r;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (k != skip) r.push_back(f[k]);
        const std::size_t rid = c.face_id(r).value();
        ridges_[i].push_back(rid);
        ridge_faces_[rid].push_back(i);
      }
    }
    degree_.assign(c.face_count(), 0);
  }

  bool empty() const noexcept { return hfaces_.empty(); }

  /// Whether the h-face columns of the ridge incidence matrix are linearly
  /// independent over GF(2). If so, no h-cycle can exist.
  bool kernel_trivial() const {
    std::vector<std::optional<GroundSubset>> basis(c_.face_count());
    for (std::size_t i = 0; i < hfaces_.size(); ++i) {
      GroundSubset v(c_.face_count());
      for (auto r : ridges_[i]) v.insert(r);
      while (!v.empty()) {
        const std::size_t pivot = v.first();
        if (!basis[pivot]) break;
        v ^= *basis[pivot];
      }
      if (v.empty()) return false;
      basis[v.first()] = v;
    }
    return true;
  }

  /// First cycle whose smallest member is as small as possible.
  std::optional<HCycleWitness> find_any() {
    if (hfaces_.empty() || kernel_trivial()) return std::nullopt;
    for (std::size_t start = 0; start < hfaces_.size(); ++start) {
      min_allowed_ = start;
      if (auto w = from(start)) return w;
    }
    return std::nullopt;
  }

  /// A cycle that contains `face`, if one exists.
  std::optional<HCycleWitness> find_through(std::size_t face) {
    if (face >= local_.size() || local_[face] == kNone) return std::nullopt;
    min_allowed_ = 0;
    return from(local_[face]);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::optional<HCycleWitness> from(std::size_t start) {
    chosen_.assign(hfaces_.size(), false);
    std::fill(degree_.begin(), degree_.end(), 0);
    order_.clear();
    add(start);
    if (!extend()) return std::nullopt;
    HCycleWitness w{h_, {}};
    for (auto i : order_) w.members.push_back(hfaces_[i]);
    std::sort(w.members.begin(), w.members.end());
    return w;
  }

  void add(std::size_t i) {
    chosen_[i] = true;
    order_.push_back(i);
    for (auto r : ridges_[i]) ++degree_[r];
  }

  void remove(std::size_t i) {
    chosen_[i] = false;
    order_.pop_back();
    for (auto r : ridges_[i]) --degree_[r];
  }

  bool extend() {
    std::size_t open = kNone;
    for (auto i : order_)
      for (auto r : ridges_[i])
        if (degree_[r] == 1 && (open == kNone || r < open)) open = r;
    if (open == kNone) return true;
    for (auto cand : ridge_faces_.at(open)) {
      if (chosen_[cand] || cand < min_allowed_) continue;
      bool fits = true;
      for (auto r : ridges_[cand]) fits = fits && degree_[r] <= 1;
      if (!fits) continue;
      add(cand);
      if (extend()) return true;
      remove(cand);
    }
    return false;
  }

  const SimplicialComplex& c_;
  std::size_t h_;
  std::vector<std::size_t> hfaces_;
  std::vector<std::size_t> local_;
  std::vector<std::vector<std::size_t>> ridges_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> ridge_faces_;
  std::vector<std::size_t> degree_;
  std::vector<bool> chosen_;
  std::vector<std::size_t> order_;
  std::size_t min_allowed_ = 0;
};

}  // namespace detail

/// Searches the h-faces of `faces` for an h-cycle.
///
/// A trivial GF(2) kernel of the ridge incidence matrix rules out cycles
/// immediately. Otherwise start faces are tried in ascending id order and
/// extended by backtracking, closing the smallest open ridge first and never
/// letting a ridge exceed degree 2.
inline std::optional<HCycleWitness> contains_h_cycle(const SimplicialComplex& c, const GroundSubset& faces,
                                                     std::size_t h) {
  if (h < 2) throw Error(Errc::BadH, "h-cycles are defined for h >= 2");
  if (faces.ground_size() != c.face_count()) throw Error(Errc::DomainMismatch, "face set over a different complex");
  detail::CycleSearch search(c, faces, h);
  return search.find_any();
}

/// As contains_h_cycle, restricted to cycles through `face`.
inline std::optional<HCycleWitness> contains_h_cycle_through(const SimplicialComplex& c, const GroundSubset& faces,
                                                             std::size_t h, std::size_t face) {
  if (h < 2) throw Error(Errc::BadH, "h-cycles are defined for h >= 2");
  detail::CycleSearch search(c, faces, h);
  return search.find_through(face);
}

/// (D1 ∪ D2) \ (D1 ∩ D2) as sorted face ids.
inline std::vector<std::size_t> symmetric_difference(const HCycleWitness& d1, const HCycleWitness& d2) {
  if (d1.h != d2.h) throw Error(Errc::DimensionMismatch, "cycles have different h");
  std::vector<std::size_t> a = d1.members, b = d2.members, common, out;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) throw Error(Errc::DisjointCycles, "cycles share no face");
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.empty()) throw Error(Errc::Degenerate, "symmetric difference of a cycle with itself is empty");
  return out;
}

/// The po-independence system (faces under the dual order, h-acyclic
/// subcomplexes). The oracle memoizes verdicts keyed by the h-face set; when
/// the set minus one h-face is already known to be acyclic only cycles
/// through that face are searched.
class IhSystem {
 public:
  const SimplicialComplex& complex() const noexcept { return *complex_; }
  std::size_t h() const noexcept { return h_; }
  const PoIndependenceSystem& system() const noexcept { return system_; }

 private:
  friend IhSystem ih_system(const SimplicialComplex&, std::size_t);

  struct Memo {
    std::mutex mutex;
    std::unordered_map<GroundSubset, bool, GroundSubsetHash> acyclic;
  };

  IhSystem(std::shared_ptr<const SimplicialComplex> c, std::size_t h, PoIndependenceSystem sys)
      : complex_(std::move(c)), h_(h), system_(std::move(sys)) {}

  std::shared_ptr<const SimplicialComplex> complex_;
  std::size_t h_;
  PoIndependenceSystem system_;
};

inline IhSystem ih_system(const SimplicialComplex& c, std::size_t h) {
  if (h < 2 || h > c.dimension())
    throw Error(Errc::BadH, "h must satisfy 2 <= h <= " + std::to_string(c.dimension()) + ", got " +
                                std::to_string(h));
  auto complex = std::make_shared<const SimplicialComplex>(c);
  auto memo = std::make_shared<IhSystem::Memo>();
  const GroundSubset hmask = complex->subset_of(complex->faces_of_size(h));
  auto oracle = [complex, memo, hmask, h](const GroundSubset& faces) {
    const GroundSubset key = faces & hmask;
    std::lock_guard lock(memo->mutex);
    if (auto it = memo->acyclic.find(key); it != memo->acyclic.end()) return it->second;
    std::optional<bool> verdict;
    key.for_each([&](std::size_t f) {
      if (verdict) return;
      auto prev = memo->acyclic.find(key.without(f));
      if (prev != memo->acyclic.end() && prev->second)
        verdict = !contains_h_cycle_through(*complex, key, h, f).has_value();
    });
    if (!verdict) verdict = !contains_h_cycle(*complex, key, h).has_value();
    memo->acyclic.emplace(key, *verdict);
    return *verdict;
  };
  auto sys = PoIndependenceSystem::from_oracle(complex->face_poset(), oracle);
  return IhSystem(std::move(complex), h, std::move(sys));
}

struct SpanningResult {
  GroundSubset faces;
  GreedyTrace trace;
};

/// Maximum-weight h-acyclic subcomplex by PGREEDY on ih_system(c, h). The
/// weight must be order-reversing under containment.
inline SpanningResult max_spanning_acyclic(const SimplicialComplex& c, std::size_t h, const WeightFunction& w,
                                           const GreedyOptions& opts = {}) {
  require_same_domain(c.face_poset(), w);
  if (!opts.unchecked_weights && !is_order_preserving(c.face_poset(), w))
    throw Error(Errc::WeightNotOrderReversing, "face weights must not increase from a face to its superfaces");
  const IhSystem sys = ih_system(c, h);
  GreedyOptions inner = opts;
  inner.unchecked_weights = true;
  GreedyTrace trace = pgreedy(sys.system(), w, inner);
  GroundSubset faces = trace.result;
  return {std::move(faces), std::move(trace)};
}

}  // namespace pomat
