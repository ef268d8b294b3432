// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pomat/pomat.hpp"
#include "test_support.hpp"

using namespace pomat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int number, const char* title, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", number, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

struct CorpusResult {
  std::vector<PoIndependenceSystem> systems;
  std::vector<EquivalenceReport> reports;
};

CorpusResult run_corpus(std::vector<PoIndependenceSystem> systems, std::uint64_t seed) {
  CorpusResult out;
  for (std::size_t i = 0; i < systems.size(); ++i)
    out.reports.push_back(edmonds_rado_check(systems[i], 100, seed + i, std::to_string(i)));
  out.systems = std::move(systems);
  return out;
}

Outcome summarize(const CorpusResult& c, bool require_gap) {
  std::size_t violations = 0, matroids = 0;
  std::string first;
  for (const auto& r : c.reports) {
    matroids += r.is_matroid;
    bool bad = r.theorem_violation;
    if (require_gap && !r.is_matroid && !(r.adversarial_gap && *r.adversarial_gap > 0)) bad = true;
    if (bad) {
      ++violations;
      if (first.empty()) first = " first: system " + r.system_id + " " + r.detail;
    }
  }
  return {violations == 0, std::to_string(c.reports.size()) + " systems, " + std::to_string(matroids) +
                               " poset matroids, " + std::to_string(violations) + " violations" + first};
}

SimplicialComplex complex_within(std::size_t max_vertices, std::size_t min_dim, std::size_t face_cap,
                                 std::mt19937_64& rng) {
  while (true) {
    const std::size_t v = std::uniform_int_distribution<std::size_t>(3, max_vertices)(rng);
    const std::size_t f = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    auto c = random_complex(v, f, 4, rng());
    if (c.dimension() >= min_dim && c.face_count() <= face_cap) return c;
  }
}

}  // namespace

int main() {
  CorpusResult exhaustive, randomized;

  criterion(1, "equivalence on every system over posets with at most 3 elements", [&] {
    std::vector<PoIndependenceSystem> systems;
    for (std::size_t n = 0; n <= 3; ++n)
      for (const Poset& p : all_posets(n))
        for (const auto& fam : all_hereditary_families(p)) systems.push_back(PoIndependenceSystem::explicit_family(p, fam));
    exhaustive = run_corpus(std::move(systems), 1);
    return summarize(exhaustive, true);
  });

  criterion(2, "equivalence on 300 random systems over 4-6 elements", [&] {
    std::mt19937_64 rng(20240601);
    std::vector<PoIndependenceSystem> systems;
    for (int i = 0; i < 300; ++i) {
      const std::size_t size = std::uniform_int_distribution<std::size_t>(4, 6)(rng);
      const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      systems.push_back(random_system(size, gens, rng()));
    }
    randomized = run_corpus(std::move(systems), 1000);
    return summarize(randomized, true);
  });

  criterion(3, "adversarial weights are order-preserving and strictly beat pgreedy", [&] {
    std::size_t checked = 0, bad = 0;
    for (const CorpusResult* c : {&exhaustive, &randomized})
      for (std::size_t i = 0; i < c->reports.size(); ++i) {
        const auto& v = c->reports[i].violation;
        if (!v) continue;
        ++checked;
        const auto& sys = c->systems[i];
        const WeightFunction w = adversarial_weight(sys, *v);
        const bool ok = is_order_preserving(sys.poset(), w) && pgreedy(sys, w).total < brute_force_optimum(sys, w).optimum;
        bad += !ok;
      }
    return Outcome{bad == 0 && checked > 0, std::to_string(checked) + " violations checked, " + std::to_string(bad) + " failures"};
  });

  criterion(4, "global and local augmentation axioms agree", [&] {
    std::size_t checked = 0, bad = 0;
    for (const CorpusResult* c : {&exhaustive, &randomized})
      for (const auto& sys : c->systems) {
        ++checked;
        bad += axiom_ii_witness(sys).has_value() != axiom_ii_prime_witness(sys).has_value();
      }
    return Outcome{bad == 0, std::to_string(checked) + " systems, " + std::to_string(bad) + " discrepancies"};
  });

  criterion(5, "symmetric difference of overlapping h-cycles is an h-cycle", [&] {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (std::size_t h : {2u, 3u})
      for (const auto& pr : overlapping_cycle_pairs(250, h, 5 + h)) {
        const auto d = symmetric_difference(pr.first, pr.second);
        if (d.empty()) continue;
        ++checked;
        if (is_h_cycle(*pr.ambient, d, h)) continue;
        ++bad;
        if (first.empty()) {
          first = " first: h=" + std::to_string(h) + " on " + std::to_string(pr.ambient->vertex_count()) + " vertices, {";
          for (std::size_t i = 0; i < d.size(); ++i) first += (i ? " " : "") + pr.ambient->face_label(d[i]);
          first += "}";
        }
      }
    return Outcome{bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " failures" + first};
  });

  criterion(6, "I_h is a poset matroid on random complexes with at most 5 vertices", [&] {
    std::mt19937_64 rng(6);
    std::size_t checked = 0, bad = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t h = 2 + static_cast<std::size_t>(i % 2);
      const SimplicialComplex c = complex_within(5, h, 26, rng);
      const IhSystem ih = ih_system(c, h);
      ++checked;
      bad += !is_poset_matroid(ih.system(), c.face_count());
    }
    return Outcome{bad == 0, std::to_string(checked) + " complexes, " + std::to_string(bad) + " failures"};
  });

  criterion(7, "spanning acyclic greedy matches brute force and Kruskal", [&] {
    std::mt19937_64 rng(7);
    std::size_t bad = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t h = 2 + static_cast<std::size_t>(i % 2);
      const SimplicialComplex c = complex_within(6, h, kDefaultEnumerationCap, rng);
      const WeightFunction w = random_order_preserving_weight(c.face_poset(), rng);
      const SpanningResult r = max_spanning_acyclic(c, h, w);
      const bool ok = is_subcomplex(c, r.faces) && is_spanning(c, r.faces) && !contains_h_cycle(c, r.faces, h) &&
                      r.trace.total == brute_force_optimum(ih_system(c, h).system(), w, c.face_count(), false).optimum;
      bad += !ok;
    }
    std::size_t graph_bad = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
      std::vector<Face> edges;
      std::bernoulli_distribution keep(0.5);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (keep(rng)) edges.push_back({a, b});
      if (edges.empty()) edges.push_back({0, 1});
      const SimplicialComplex g = build_complex(n, edges);
      std::uniform_int_distribution<int> num(0, 100);
      std::vector<Rational> w(g.face_count());
      std::vector<pomat::testing::WeightedEdge> list;
      for (std::size_t id = 0; id < g.face_count(); ++id) {
        const Face& f = g.face(id);
        if (f.size() == 1) {
          w[id] = 1000;
        } else {
          w[id] = Rational(num(rng), 8);
          list.push_back({f[0], f[1], w[id]});
        }
      }
      const SpanningResult r = max_spanning_acyclic(g, 2, WeightFunction(w));
      Rational edge_total = 0;
      r.faces.for_each([&](std::size_t id) {
        if (g.face(id).size() == 2) edge_total += w[id];
      });
      graph_bad += edge_total != pomat::testing::kruskal_max_forest(n, list);
    }
    return Outcome{bad == 0 && graph_bad == 0, "100 complexes, " + std::to_string(bad) + " failures; 100 graphs, " +
                                                   std::to_string(graph_bad) + " Kruskal mismatches"};
  });

  criterion(8, "greedy and pgreedy traces coincide on antichains", [&] {
    std::mt19937_64 rng(8);
    std::size_t bad = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      Poset anti = make_antichain(default_labels(n));
      std::bernoulli_distribution coin(0.5);
      std::vector<GroundSubset> gens;
      const int count = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int g = 0; g < count; ++g) {
        GroundSubset s = anti.empty_subset();
        for (std::size_t x = 0; x < n; ++x)
          if (coin(rng)) s.insert(x);
        gens.push_back(s);
      }
      const auto sys = PoIndependenceSystem::explicit_family(anti, down_closure(anti, gens));
      const WeightFunction w = random_order_preserving_weight(anti, rng);
      bad += !(greedy(sys, w) == pgreedy(sys, w));
    }
    return Outcome{bad == 0, "100 systems, " + std::to_string(bad) + " discrepancies"};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
