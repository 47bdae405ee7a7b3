#include <gtest/gtest.h>

#include "deltaflip/errors.hpp"
#include "deltaflip/graph.hpp"
#include "testkit.hpp"

using namespace deltaflip;
using namespace testkit;

TEST(Graph, Construction) {
  EXPECT_THROW(Graph(Gf2Matrix(GroundSet::numbered(2), {0b10, 0b00})), DomainError);
  const Graph g = Graph::from_edges(GroundSet::numbered(3), {{0, 1}, {2, 2}});
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_loop(2));
  EXPECT_FALSE(g.has_loop(0));
  EXPECT_EQ(g.loops(), Subset{0b100});
  EXPECT_EQ(g.neighbours(0), Subset{0b010});
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_THROW(Graph::from_edges(GroundSet::numbered(2), {{0, 1}, {1, 0}}), DomainError);
}

TEST(GraphSystem, Examples) {
  EXPECT_EQ(graph_to_system(triangle()), m0());
  // path 1 - 3 - 2
  const Graph path = Graph::from_edges(GroundSet({"1", "2", "3"}), {{0, 2}, {1, 2}});
  EXPECT_EQ(graph_to_system(path), sys({"1", "2", "3"}, {{}, {"1", "3"}, {"2", "3"}}));

  const Graph g = system_to_graph(loop_complement(m0(), 0b111));
  EXPECT_EQ(g.loops(), Subset{0b010});
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_THROW(system_to_graph(make(2, {0b11})), NotAGraphError);
  // has the right singletons and pairs but an extra triple
  EXPECT_THROW(system_to_graph(make(3, {0, 0b111})), NotAGraphError);
}

TEST(GraphFlip, Examples) {
  const Graph t = triangle();
  EXPECT_EQ(graph_flip(t, FlipKind::LoopComplement, 0b111).loops(), Subset{0b010});
  EXPECT_THROW(graph_flip(t, FlipKind::Pivot, 0b010), PivotUndefinedError);
  EXPECT_EQ(elementary_pivots(t), (std::vector<Subset>{0b001, 0b100}));
  EXPECT_EQ(elementary_pivots(Graph::from_edges(GroundSet::numbered(3), {{0, 1}, {1, 2}})),
            (std::vector<Subset>{0b011, 0b110}));
}

TEST(GraphPoly, Examples) {
  const Graph t = triangle();
  EXPECT_EQ(graph_poly(t, PolyKind::q1), (UniPoly{5, 3}));
  EXPECT_EQ(graph_poly(t, PolyKind::Q1), (UniPoly{16, 10, 1}));
  EXPECT_EQ(graph_poly(Graph::from_edges(GroundSet::numbered(1), {}, 0b1), PolyKind::q1), UniPoly{2});
  EXPECT_EQ(marked_bracket(t, 0b010), (UniPoly{6, 2}));
  EXPECT_EQ(marked_bracket(t, 0b111), graph_poly(t, PolyKind::q2));
  EXPECT_EQ(marked_bracket(t, 0), graph_poly(t, PolyKind::q3));
}

TEST(GraphOps, InducedAndLocalComplement) {
  const Graph t = triangle();
  const Graph h = delete_vertices(t, 0b010);
  EXPECT_EQ(h.n(), 2u);
  EXPECT_EQ(h.loops(), Subset{0b11});
  EXPECT_EQ(h.ground().label(1), "r");
  const Graph star = Graph::from_edges(GroundSet::numbered(4), {{0, 1}, {0, 2}, {0, 3}});
  const Graph lc = local_complement_simple(star, 0);
  EXPECT_EQ(lc.edges().size(), 6u);
  EXPECT_EQ(lc.loops(), Subset{0});
  EXPECT_THROW(local_complement_simple(star, 4), DomainError);
}

// ---- properties ----

TEST(GraphProperty, RoundTripExhaustive) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const int pairs = static_cast<int>(n * (n + 1) / 2);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      std::vector<Subset> rows(n, 0);
      int bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j, ++bit) {
          if (code >> bit & 1) {
            rows[i] |= singleton(j);
            rows[j] |= singleton(i);
          }
        }
      }
      const Graph g(Gf2Matrix(GroundSet::numbered(n), rows));
      const SetSystem m = graph_to_system(g);
      ASSERT_EQ(system_to_graph(m), g) << m.format();
      EXPECT_TRUE(is_delta_matroid(m));
    }
  }
}

TEST(GraphProperty, DistanceIsNullity) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 7));
    const Graph g = random_graph(rng, n);
    const Family f = family_of(graph_to_system(g));
    const Subset x = random_subset(rng, n);
    EXPECT_EQ(o_distance(f, x), det_nullity(g.adjacency(), x).nullity);
  }
}

TEST(GraphProperty, FlipsCommuteWithSupport) {
  Rng rng(62);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 6));
    const Graph g = random_graph(rng, n);
    const SetSystem m = graph_to_system(g);
    const Subset x = random_subset(rng, n);
    for (FlipKind k : {FlipKind::Pivot, FlipKind::LoopComplement, FlipKind::DualPivot}) {
      const SetSystem expected = apply_vertex_flip(m, k, x);
      try {
        EXPECT_EQ(graph_to_system(graph_flip(g, k, x)), expected) << to_string(k);
      } catch (const PivotUndefinedError&) {
        // undefined on the graph side exactly when the flipped system lacks the empty set
        EXPECT_FALSE(expected.contains(0)) << to_string(k);
      }
    }
  }
}

TEST(GraphProperty, PolynomialsMatchSetSystem) {
  Rng rng(63);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_graph(rng, static_cast<std::size_t>(pick(rng, 0, 6)));
    const SetSystem m = graph_to_system(g);
    for (PolyKind k : {PolyKind::Q1, PolyKind::q1, PolyKind::q2, PolyKind::q3}) {
      EXPECT_EQ(graph_poly(g, k), poly_direct(m, k)) << to_string(k);
    }
    if (g.loops() == 0 && g.n() > 0) EXPECT_EQ(graph_poly(g, PolyKind::q1).evaluate(-1), 0);
  }
}

TEST(GraphProperty, MarkedBracketByNullity) {
  Rng rng(64);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 6));
    const Graph g = random_graph(rng, n);
    const Subset c = random_subset(rng, n);
    UniPoly expected;
    for (Subset x = 0; x <= full_subset(n); ++x) {
      const Gf2Matrix a = g.adjacency().toggle_diagonal(x);
      expected += UniPoly::monomial(static_cast<std::size_t>(o_nullity(a.rows(), x | c)));
    }
    EXPECT_EQ(marked_bracket(g, c), expected);
  }
}

TEST(GraphProperty, LocalComplementIsLoopedPivot) {
  Rng rng(65);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 7));
    const Graph g = random_graph(rng, n);
    const Graph simple(g.adjacency().toggle_diagonal(g.loops()));
    const auto u = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(n) - 1));
    const Graph looped = graph_flip(graph_flip(simple, FlipKind::LoopComplement, singleton(u)), FlipKind::Pivot,
                                    singleton(u));
    const Graph expected = graph_flip(looped, FlipKind::LoopComplement, simple.neighbours(u) | singleton(u));
    EXPECT_EQ(local_complement_simple(simple, u), expected);
  }
}
