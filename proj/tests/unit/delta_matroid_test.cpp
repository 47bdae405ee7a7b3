#include <gtest/gtest.h>

#include "deltaflip/errors.hpp"
#include "testkit.hpp"

using namespace deltaflip;
using namespace testkit;

TEST(DeltaMatroid, Examples) {
  EXPECT_TRUE(is_delta_matroid(m0()));
  EXPECT_FALSE(is_delta_matroid(sys({"a", "b", "c"}, {{}, {"a", "b", "c"}})));
  EXPECT_TRUE(is_delta_matroid(sys({"a", "b"}, {{"a"}, {"b"}})));
  EXPECT_FALSE(is_delta_matroid(SetSystem(GroundSet({"a"}), {})));
}

TEST(Even, Examples) {
  EXPECT_TRUE(is_even(sys({"a", "b"}, {{}, {"a", "b"}})));
  EXPECT_FALSE(is_even(m0()));
  EXPECT_TRUE(is_even(uniform_matroid(2, 4).bases()));
  EXPECT_THROW(is_even(SetSystem(GroundSet({"a"}), {})), ImproperSystemError);
}

TEST(VfClosed, Fixtures) {
  EXPECT_TRUE(is_vf_closed(graph_to_system(triangle())));
  EXPECT_TRUE(is_vf_closed(uniform_matroid(2, 4).bases()));
  EXPECT_FALSE(is_vf_closed(uniform_matroid(2, 6).bases()));
  const SetSystem no_empty = make(3, {1, 2, 3, 4, 5, 6, 7});
  EXPECT_FALSE(is_vf_closed(no_empty));
}

TEST(Divisibility, Examples) {
  EXPECT_EQ(divisibility(m0(), 0), (DivisibilityStatus{true, true}));
  EXPECT_EQ(divisibility(make(3, {0b101}), 1), (DivisibilityStatus{false, false}));
  EXPECT_EQ(divisibility(SetSystem::power_set(GroundSet::numbered(3)), 2), (DivisibilityStatus{true, false}));
}

TEST(DistanceTriple, Examples) {
  EXPECT_EQ(distance_triple(m0(), 0), (std::array<int, 3>{0, 0, 1}));
  EXPECT_EQ(distance_triple(sys({"a"}, {{"a"}}), 0), (std::array<int, 3>{1, 0, 0}));
  EXPECT_EQ(distance_triple(sys({"a", "b"}, {{}, {"a", "b"}}), 0), (std::array<int, 3>{0, 1, 0}));
}

// ---- properties ----

TEST(DeltaMatroidProperty, AgreesWithDefinition) {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = pick(rng, 0, 5);
    Family f;
    const int size = pick(rng, 0, 8);
    for (int i = 0; i < size; ++i) f.insert(random_subset(rng, n));
    EXPECT_EQ(is_delta_matroid(make(n, f)), o_is_delta_matroid(f)) << make(n, f).format();
  }
}

TEST(DeltaMatroidProperty, ClosedUnderPivotAndProperDeletion) {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const SetSystem m = random_delta_matroid(rng);
    const Subset x = random_subset(rng, m.n());
    EXPECT_TRUE(is_delta_matroid(pivot(m, x)));
    const SetSystem d = delete_elements(m, singleton(0));
    if (!d.empty()) EXPECT_TRUE(is_delta_matroid(d));
  }
}

TEST(DeltaMatroidProperty, DistanceTripleShape) {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const SetSystem m = random_delta_matroid(rng);
    for (std::size_t v = 0; v < m.n(); ++v) {
      auto d = distance_triple(m, v);
      std::sort(d.begin(), d.end());
      EXPECT_TRUE(d[0] == d[1] && d[2] == d[0] + 1) << m.format() << " at " << v;
    }
  }
}

TEST(DeltaMatroidProperty, RestrictionKeepsDistance) {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const SetSystem m = random_delta_matroid(rng);
    const Subset x = random_subset(rng, m.n());
    const SetSystem r = restrict_to(m, x);
    if (!r.empty()) EXPECT_EQ(distance(r, 0), distance(m, 0));
  }
}

TEST(DivisibilityProperty, MatchesExistentialDefinition) {
  Rng rng(25);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = pick(rng, 1, 5);
    Family f;
    const int size = pick(rng, 1, 8);
    for (int i = 0; i < size; ++i) f.insert(random_subset(rng, n));
    const SetSystem m = make(n, f);
    for (std::size_t u = 0; u < n; ++u) {
      const Subset b = singleton(u);
      bool div = false;
      bool lonely = false;
      for (Subset x : f) {
        for (Subset y : f) div = div || ((x ^ y) & b);
        lonely = lonely || !f.count(x ^ b);
      }
      EXPECT_EQ(divisibility(m, u), (DivisibilityStatus{div, div && lonely}));
    }
  }
}

TEST(DivisibilityProperty, StrongDivisibilityIsFlipInvariant) {
  Rng rng(26);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = pick(rng, 1, 5);
    Family f;
    const int size = pick(rng, 1, 10);
    for (int i = 0; i < size; ++i) f.insert(random_subset(rng, n));
    const SetSystem m = make(n, f);
    const std::size_t u = pick(rng, 0, static_cast<int>(n) - 1);
    if (!divisibility(m, u).strongly_divisible) continue;
    const Subset w = singleton(pick(rng, 0, static_cast<int>(n) - 1));
    EXPECT_TRUE(divisibility(pivot(m, w), u).strongly_divisible);
    EXPECT_TRUE(divisibility(loop_complement(m, w), u).strongly_divisible);
  }
}

TEST(DivisibilityProperty, StrongIffWholeOrbitHasTwoSets) {
  Rng rng(27);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = pick(rng, 1, 4);
    Family f;
    const int size = pick(rng, 1, 6);
    for (int i = 0; i < size; ++i) f.insert(random_subset(rng, n));
    const SetSystem m = make(n, f);
    bool strong = false;
    Subset y = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const DivisibilityStatus s = divisibility(m, u);
      strong = strong || s.strongly_divisible;
      if (s.divisible) y |= singleton(u);
    }
    bool all_two = true;
    bool reaches_empty = false;
    for (const auto& s : vf_orbit(m, OrbitGenerators::SingleElementFlips)) {
      all_two = all_two && s.size() >= 2;
      reaches_empty = reaches_empty || s.family() == std::vector<Subset>{0};
    }
    EXPECT_EQ(strong, all_two) << m.format();
    EXPECT_EQ(!strong, reaches_empty) << m.format();
    // the witness: M+Y has a single member, Y the elements M is divisible by
    if (!strong) EXPECT_EQ(loop_complement(m, y).size(), 1u) << m.format();
  }
}
