#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <string>
#include <utility>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/greedy.hpp"
#include "pomat/independence.hpp"
#include "pomat/poset.hpp"
#include "pomat/rational.hpp"
#include "pomat/simplicial.hpp"
#include "pomat/verify.hpp"

// JSON documents:
//   poset       {"elements": ["a", ...], "covers": [["a", "b"], ...]}   (a below b)
//   weights     {"weights": {"a": "3/2", ...}}
//   system      {"poset": <poset>, "independent": [["b"], ["a", "b"], ...]}
//   complex     {"vertices": ["1", ...], "facets": [["1", "2"], ...]}
//   face weight {"weights": {"1": "10", "1,2": "3", ...}}
namespace pomat::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(Errc::BadDocument, std::string("missing field '") + key + "'");
  return doc.at(key);
}

inline std::vector<std::string> string_list(const json& arr, const char* what) {
  if (!arr.is_array()) throw Error(Errc::BadDocument, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw Error(Errc::BadDocument, std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Rational weight_value(const json& v, const std::string& key) {
  Rational r;
  if (v.is_string()) {
    r = parse_rational(v.get<std::string>());
  } else if (v.is_number_integer()) {
    r = Rational(v.get<long long>());
  } else {
    throw Error(Errc::BadRational, "weight of '" + key + "' must be a rational string");
  }
  if (r < 0) throw Error(Errc::NegativeWeight, "weight of '" + key + "' is negative");
  return r;
}

}  // namespace detail

inline Poset parse_poset(const json& doc) {
  auto labels = detail::string_list(detail::field(doc, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("covers")) {
    const json& covers = doc.at("covers");
    if (!covers.is_array()) throw Error(Errc::BadDocument, "covers must be an array");
    for (const auto& c : covers) {
      auto pair = detail::string_list(c, "cover");
      if (pair.size() != 2) throw Error(Errc::BadDocument, "each cover must be a pair of labels");
      pairs.emplace_back(pair[0], pair[1]);
    }
  }
  return build_poset(std::move(labels), pairs);
}

inline json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [x, y] : p.covers()) covers.push_back({p.label(x), p.label(y)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

/// Members listed by label in id order.
inline json subset_to_json(const std::vector<std::string>& labels, const GroundSubset& s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(labels.at(x)); });
  return out;
}

inline GroundSubset parse_subset(const Poset& p, const json& arr) {
  GroundSubset s = p.empty_subset();
  for (const auto& label : detail::string_list(arr, "subset")) {
    auto id = p.find(label);
    if (!id) throw Error(Errc::UnknownElement, "unknown element '" + label + "'");
    s.insert(*id);
  }
  return s;
}

/// Every element must receive a weight.
inline WeightFunction parse_weights(const json& doc, const Poset& p) {
  const json& weights = detail::field(doc, "weights");
  if (!weights.is_object()) throw Error(Errc::BadDocument, "weights must be an object");
  std::vector<std::optional<Rational>> values(p.size());
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    auto id = p.find(it.key());
    if (!id) throw Error(Errc::UnknownElement, "weight for unknown element '" + it.key() + "'");
    values[*id] = detail::weight_value(it.value(), it.key());
  }
  std::vector<Rational> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!values[x]) throw Error(Errc::BadDocument, "no weight for element '" + p.label(x) + "'");
    out.push_back(*values[x]);
  }
  return WeightFunction(std::move(out));
}

inline json weights_to_json(const std::vector<std::string>& labels, const WeightFunction& w) {
  json weights = json::object();
  for (std::size_t x = 0; x < w.size(); ++x) weights[labels.at(x)] = format_rational(w[x]);
  return {{"weights", weights}};
}

inline PoIndependenceSystem parse_system(const json& doc) {
  Poset p = parse_poset(detail::field(doc, "poset"));
  const json& indep = detail::field(doc, "independent");
  if (!indep.is_array()) throw Error(Errc::BadDocument, "independent must be an array");
  std::vector<GroundSubset> members;
  for (const auto& m : indep) members.push_back(parse_subset(p, m));
  return PoIndependenceSystem::explicit_family(std::move(p), members);
}

/// Explicit systems only; ∅ is left implicit.
inline json system_to_json(const PoIndependenceSystem& sys) {
  const auto& labels = sys.poset().labels();
  json indep = json::array();
  for (const auto& m : materialize(sys).sets)
    if (!m.empty()) indep.push_back(subset_to_json(labels, m));
  return {{"poset", poset_to_json(sys.poset())}, {"independent", indep}};
}

inline SimplicialComplex parse_complex(const json& doc) {
  auto labels = detail::string_list(detail::field(doc, "vertices"), "vertices");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw Error(Errc::BadDocument, "duplicate vertex '" + labels[i] + "'");
  const json& facets = detail::field(doc, "facets");
  if (!facets.is_array()) throw Error(Errc::BadDocument, "facets must be an array");
  std::vector<Face> faces;
  for (const auto& f : facets) {
    Face face;
    for (const auto& v : detail::string_list(f, "facet")) {
      auto it = index.find(v);
      if (it == index.end()) throw Error(Errc::UnknownElement, "unknown vertex '" + v + "'");
      face.push_back(it->second);
    }
    faces.push_back(std::move(face));
  }
  return build_complex(std::move(labels), faces);
}

inline json complex_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  const Poset& p = c.face_poset();
  // Facets are the minimal elements of the dual order.
  min_elements(p, p.full_subset()).for_each([&](std::size_t id) {
    json f = json::array();
    for (auto v : c.face(id)) f.push_back(c.vertex_labels()[v]);
    facets.push_back(f);
  });
  return {{"vertices", c.vertex_labels()}, {"facets", facets}};
}

/// Face keys are comma-joined vertex labels in any order; every face needs a weight.
inline WeightFunction parse_face_weights(const json& doc, const SimplicialComplex& c) {
  const json& weights = detail::field(doc, "weights");
  if (!weights.is_object()) throw Error(Errc::BadDocument, "weights must be an object");
  std::unordered_map<std::string, std::size_t> vindex;
  for (std::size_t i = 0; i < c.vertex_count(); ++i) vindex.emplace(c.vertex_labels()[i], i);
  std::vector<std::optional<Rational>> values(c.face_count());
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    Face f;
    std::string key = it.key();
    std::size_t start = 0;
    while (true) {
      const auto comma = key.find(',', start);
      const std::string v = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto vi = vindex.find(v);
      if (vi == vindex.end()) throw Error(Errc::UnknownElement, "unknown vertex '" + v + "' in face '" + key + "'");
      f.push_back(vi->second);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::sort(f.begin(), f.end());
    auto id = c.face_id(f);
    if (!id) throw Error(Errc::NotAFace, "'" + key + "' is not a face");
    values[*id] = detail::weight_value(it.value(), key);
  }
  std::vector<Rational> out;
  for (std::size_t id = 0; id < c.face_count(); ++id) {
    if (!values[id]) throw Error(Errc::BadDocument, "no weight for face '" + c.face_label(id) + "'");
    out.push_back(*values[id]);
  }
  return WeightFunction(std::move(out));
}

inline json trace_to_json(const std::vector<std::string>& labels, const GreedyTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"element", labels.at(s.element)}, {"weight", format_rational(s.weight)}, {"accepted", s.accepted}});
  return {{"steps", steps}, {"total", format_rational(trace.total)}};
}

inline json violation_to_json(const std::vector<std::string>& labels, const AxiomViolation& v) {
  return {{"A", subset_to_json(labels, v.a)}, {"B", subset_to_json(labels, v.b)}, {"k", v.k}, {"t", v.t}};
}

inline json report_to_json(const std::vector<std::string>& labels, const EquivalenceReport& r) {
  json out = {{"system", r.system_id},
              {"is_poset_matroid", r.is_matroid},
              {"greedy_always_optimal", r.greedy_always_optimal},
              {"trials", r.trials},
              {"seed", r.seed},
              {"outcome", r.theorem_violation ? "THEOREM-VIOLATION" : "consistent"}};
  out["adversarial_gap"] = r.adversarial_gap ? json(format_rational(*r.adversarial_gap)) : json(nullptr);
  out["violation"] = r.violation ? violation_to_json(labels, *r.violation) : json(nullptr);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

}  // namespace pomat::io
