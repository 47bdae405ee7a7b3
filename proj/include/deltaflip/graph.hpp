#pragma once

#include <utility>
#include <vector>

#include "deltaflip/gf2.hpp"
#include "deltaflip/interlace.hpp"
#include "deltaflip/polynomial.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// Undirected graph with loops and no parallel edges, stored as its
/// symmetric adjacency matrix over the two-element field.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError if `adjacency` is not symmetric.
  explicit Graph(Gf2Matrix adjacency);
  /// Edges are unordered label-index pairs; {u, u} adds a loop.
  static Graph from_edges(GroundSet vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          Subset loops = 0);

  const GroundSet& ground() const { return adj_.ground(); }
  std::size_t n() const { return adj_.n(); }
  const Gf2Matrix& adjacency() const { return adj_; }

  bool has_loop(std::size_t u) const { return adj_.at(u, u); }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u, v); }
  Subset loops() const { return adj_.diagonal(); }
  /// N_G(u), excluding u itself.
  Subset neighbours(std::size_t u) const { return adj_.rows()[u] & ~singleton(u); }
  /// Non-loop edges (u, v) with u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Gf2Matrix adj_;
};

/// M_G, the support set system of the adjacency matrix.
SetSystem graph_to_system(const Graph& g, bool force = false);

/// Reads loops and edges off the singletons and pairs of M, then checks that
/// the reconstructed graph reproduces M. Throws NotAGraphError otherwise.
Graph system_to_graph(const SetSystem& m, bool force = false);

/// G*X (principal pivot transform), G+X (toggle loops) or G~*X (+u *u +u per
/// element). Throws PivotUndefinedError when a pivot is not defined.
Graph graph_flip(const Graph& g, FlipKind kind, Subset x);

/// Minimal nonempty members of M_G: looped singletons and edges between
/// non-looped vertices, in canonical order.
std::vector<Subset> elementary_pivots(const Graph& g);

/// Nullity sums:
///   q1 = sum_X y^{n(G[X])},  q2 = sum_X y^{n(G+X)},  q3 = sum_X y^{n((G+V)[X])},
///   Q1 = sum_X sum_{Z subset X} y^{n((G+Z)[X])}.
UniPoly graph_poly(const Graph& g, PolyKind which, bool force = false);

/// sum_X y^{n((G+X)[X | C])}.
UniPoly marked_bracket(const Graph& g, Subset c, bool force = false);

/// G[X] on the vertex set X.
Graph induced(const Graph& g, Subset x);
inline Graph delete_vertices(const Graph& g, Subset x) {
  return induced(g, g.ground().full() & ~x);
}

/// Complements the edges within N_G(u) without touching loops.
Graph local_complement_simple(const Graph& g, std::size_t u);

}  // namespace deltaflip
