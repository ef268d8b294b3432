#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pomat/poset.hpp"
#include "pomat/verify.hpp"
#include "test_support.hpp"

using namespace pomat;
using pomat::testing::brute_force_up_sets;
using pomat::testing::diamond;

TEST(BuildPoset, TwoElementChain) {
  Poset p = build_poset({"a", "b"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
  EXPECT_TRUE(p.leq(0, 0));
  EXPECT_TRUE(p.leq(1, 1));
  EXPECT_TRUE(p.leq(0, 1));
  EXPECT_FALSE(p.leq(1, 0));
  EXPECT_EQ(p.covers(), (std::vector<RelationPair>{{0, 1}}));
}

TEST(BuildPoset, EmptyRelationIsAntichain) {
  Poset p = make_antichain({"a", "b", "c"});
  EXPECT_TRUE(p.is_antichain());
  EXPECT_TRUE(p.covers().empty());
}

TEST(BuildPoset, RejectsCycle) {
  try {
    build_poset({"a", "b"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "a"}});
    FAIL() << "expected CycleDetected";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CycleDetected);
  }
}

TEST(BuildPoset, RejectsDanglingPair) {
  try {
    build_poset({"a"}, std::vector<std::pair<std::string, std::string>>{{"a", "z"}});
    FAIL() << "expected UnknownElement";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownElement);
  }
}

TEST(BuildPoset, TransitiveClosureAndCoversRoundTrip) {
  // a < b < c given with a redundant pair.
  Poset p = build_poset({"a", "b", "c"}, std::vector<RelationPair>{{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_EQ(p.covers(), (std::vector<RelationPair>{{0, 1}, {1, 2}}));
  EXPECT_EQ(build_poset(p.labels(), p.covers()), p);
}

TEST(UpSet, ChainCases) {
  Poset p = make_chain({"a", "b"});
  EXPECT_TRUE(is_up_set(p, p.subset({1})));
  EXPECT_FALSE(is_up_set(p, p.subset({0})));
  EXPECT_TRUE(is_up_set(p, p.empty_subset()));
}

TEST(UpSet, DomainMismatchThrows) {
  Poset p = make_chain({"a", "b"});
  EXPECT_THROW(is_up_set(p, GroundSubset(3)), Error);
}

TEST(MaxElements, Examples) {
  Poset chain = make_chain({"a", "b"});
  EXPECT_EQ(max_elements(chain, chain.full_subset()), chain.subset({1}));

  Poset anti = make_antichain({"a", "b", "c"});
  EXPECT_EQ(max_elements(anti, anti.subset({0, 2})), anti.subset({0, 2}));

  // Diamond 0 < {a, b} < 1, ids: 0, a=1, b=2, 1=3. Definitional scan.
  Poset d = diamond();
  const GroundSubset s = d.subset({0, 1, 2});
  GroundSubset expected = d.empty_subset();
  s.for_each([&](std::size_t x) {
    bool maximal = true;
    s.for_each([&](std::size_t y) { maximal = maximal && !d.less(x, y); });
    if (maximal) expected.insert(x);
  });
  EXPECT_EQ(expected, d.subset({1, 2}));
  EXPECT_EQ(max_elements(d, s), expected);
}

TEST(OrderPreserving, Examples) {
  Poset chain = make_chain({"a", "b"});
  EXPECT_TRUE(is_order_preserving(chain, WeightFunction({1, 2})));
  EXPECT_FALSE(is_order_preserving(chain, WeightFunction({2, 1})));
  Poset anti = make_antichain({"a", "b", "c"});
  EXPECT_TRUE(is_order_preserving(anti, WeightFunction({5, 0, Rational(1, 3)})));
}

TEST(WeightFunction, RejectsNegative) {
  EXPECT_THROW(WeightFunction({1, -1}), Error);
}

TEST(EnumerateUpSets, Examples) {
  Poset chain = make_chain({"a", "b"});
  auto ups = enumerate_up_sets(chain);
  std::set<std::uint64_t> masks;
  for (auto& u : ups) masks.insert(u.low_word());
  EXPECT_EQ(masks, (std::set<std::uint64_t>{0b00, 0b10, 0b11}));

  Poset anti = make_antichain(default_labels(4));
  EXPECT_EQ(enumerate_up_sets(anti).size(), 16u);

  Poset d = diamond();
  const auto oracle = brute_force_up_sets(d);
  EXPECT_EQ(oracle.size(), 6u);
  EXPECT_EQ(enumerate_up_sets(d).size(), oracle.size());
}

TEST(EnumerateUpSets, CapEnforced) {
  Poset anti = make_antichain(default_labels(21));
  try {
    enumerate_up_sets(anti);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GroundSetTooLarge);
  }
  Poset chain = make_chain(default_labels(30));
  EXPECT_EQ(enumerate_up_sets(chain, 30).size(), 31u);
}

TEST(Dual, ReversesOrder) {
  Poset chain = make_chain({"a", "b"});
  Poset d = dual(chain);
  EXPECT_TRUE(d.leq(1, 0));
  EXPECT_FALSE(d.leq(0, 1));
  EXPECT_EQ(dual(d), chain);
  Poset anti = make_antichain({"a", "b", "c"});
  EXPECT_EQ(dual(anti), anti);
}

TEST(MonotoneClosure, Examples) {
  Poset chain = make_chain({"a", "b"});
  EXPECT_EQ(monotone_closure(chain, WeightFunction({5, 1})), WeightFunction({5, 5}));
  WeightFunction ok({1, 2});
  EXPECT_EQ(monotone_closure(chain, ok), ok);
  Poset anti = make_antichain({"a", "b"});
  WeightFunction any({7, 0});
  EXPECT_EQ(monotone_closure(anti, any), any);
}

// Independent upward closure over the cover relation only.
static GroundSubset closure_by_covers(const Poset& p, GroundSubset s) {
  const auto covers = p.covers();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [x, y] : covers)
      if (s.contains(x) && !s.contains(y)) {
        s.insert(y);
        changed = true;
      }
  }
  return s;
}

class PosetProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PosetProperties, Invariants) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 1 + GetParam() % 9;
  const Poset p = random_poset(n, rng);

  // Order axioms.
  for (std::size_t x = 0; x < n; ++x) {
    ASSERT_TRUE(p.leq(x, x));
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) ASSERT_FALSE(p.leq(x, y) && p.leq(y, x));
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(x, y) && p.leq(y, z)) ASSERT_TRUE(p.leq(x, z));
    }
  }

  const auto oracle = brute_force_up_sets(p);
  const auto ups = enumerate_up_sets(p);
  ASSERT_EQ(ups.size(), oracle.size());
  std::set<std::uint64_t> seen;
  for (const auto& u : ups) {
    ASSERT_TRUE(is_up_set(p, u));
    ASSERT_TRUE(seen.insert(u.low_word()).second);
  }
  for (const auto& a : ups)
    for (const auto& b : ups) {
      ASSERT_TRUE(seen.count((a | b).low_word()));
      ASSERT_TRUE(seen.count((a & b).low_word()));
    }

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const GroundSubset s = GroundSubset::from_mask(n, mask);
    ASSERT_EQ(is_up_set(p, s), closure_by_covers(p, s) == s);
    ASSERT_EQ(is_up_set(dual(p), s), is_down_set(p, s));
    const GroundSubset m = max_elements(p, s);
    ASSERT_TRUE(m.is_subset_of(s));
    s.for_each([&](std::size_t x) { ASSERT_TRUE(p.up(x).intersects(m)); });
  }

  std::uniform_int_distribution<int> num(0, 20);
  std::vector<Rational> base;
  for (std::size_t i = 0; i < n; ++i) base.emplace_back(num(rng), 4);
  const WeightFunction w = monotone_closure(p, WeightFunction(base));
  ASSERT_TRUE(is_order_preserving(p, w));
  for (std::size_t i = 0; i < n; ++i) ASSERT_GE(w[i], base[i]);
  ASSERT_EQ(monotone_closure(p, w), w);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PosetProperties, ::testing::Range<std::uint64_t>(0, 60));

TEST(RationalIo, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}
