#include "deltaflip/graph.hpp"

#include <algorithm>
#include <string>

#include "deltaflip/errors.hpp"

namespace deltaflip {

Graph::Graph(Gf2Matrix adjacency) : adj_(std::move(adjacency)) {
  if (!adj_.is_symmetric()) throw DomainError("graph adjacency matrix must be symmetric");
}

Graph Graph::from_edges(GroundSet vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        Subset loops) {
  vertices.require_subset(loops);
  std::vector<Subset> rows(vertices.size(), 0);
  for (auto [u, v] : edges) {
    if (u >= rows.size() || v >= rows.size()) throw DomainError("edge endpoint outside the vertex set");
    if (u == v) {
      loops |= singleton(u);
      continue;
    }
    if (contains(rows[u], v)) throw DomainError("parallel edge between " + vertices.label(u) + " and " + vertices.label(v));
    rows[u] |= singleton(v);
    rows[v] |= singleton(u);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (contains(loops, i)) rows[i] |= singleton(i);
  }
  return Graph(Gf2Matrix(std::move(vertices), std::move(rows)));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n(); ++u) {
    for (Subset rest = adj_.rows()[u] & ~full_subset(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }
  return out;
}

SetSystem graph_to_system(const Graph& g, bool force) {
  return support_set_system(g.adjacency(), force);
}

Graph system_to_graph(const SetSystem& m, bool force) {
  const std::size_t n = m.n();
  if (!force && n > kSupportMaxN) {
    throw SizeGuardError("graph reconstruction check enumerates 2^n minors; n = " + std::to_string(n));
  }
  std::vector<Subset> rows(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (m.contains(singleton(u))) rows[u] |= singleton(u);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool both_loops = contains(rows[u], u) && contains(rows[v], v);
      if (m.contains(singleton(u) | singleton(v)) != both_loops) {
        rows[u] |= singleton(v);
        rows[v] |= singleton(u);
      }
    }
  }
  Graph g(Gf2Matrix(m.ground(), std::move(rows)));
  if (graph_to_system(g, force) != m) {
    throw NotAGraphError("set system " + m.format() + " is not M_G for any graph");
  }
  return g;
}

Graph graph_flip(const Graph& g, FlipKind kind, Subset x) {
  g.ground().require_subset(x);
  switch (kind) {
    case FlipKind::Pivot:
      return Graph(ppt(g.adjacency(), x));
    case FlipKind::LoopComplement:
      return Graph(g.adjacency().toggle_diagonal(x));
    case FlipKind::DualPivot:
      // the single-element flips commute across distinct elements, so
      // ~*X = +X *X +X; doing it in one pivot avoids order-dependent failures
      return Graph(ppt(g.adjacency().toggle_diagonal(x), x).toggle_diagonal(x));
  }
  return g;
}

std::vector<Subset> elementary_pivots(const Graph& g) {
  std::vector<Subset> out;
  const Subset loops = g.loops();
  for (std::size_t u = 0; u < g.n(); ++u) {
    if (contains(loops, u)) out.push_back(singleton(u));
  }
  for (auto [u, v] : g.edges()) {
    if (!contains(loops, u) && !contains(loops, v)) out.push_back(singleton(u) | singleton(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void guard(std::size_t n, std::size_t cap, bool force, const char* what) {
  if (n > 26 || (!force && n > cap)) {
    throw SizeGuardError(std::string(what) + " enumerates exponentially many subsets; n = " +
                         std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

UniPoly graph_poly(const Graph& g, PolyKind which, bool force) {
  const std::size_t n = g.n();
  guard(n, which == PolyKind::Q1 ? kMultiQMaxN : kSubsetSumMaxN, force, "graph polynomial");
  const Gf2Matrix& a = g.adjacency();
  const Subset full = g.ground().full();
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (which == PolyKind::Q1) {
    for (Subset x = 0;; ++x) {
      // Z ranges over the subsets of X
      for (Subset z = x;; z = (z - 1) & x) {
        ++counts[det_nullity(a.toggle_diagonal(z), x).nullity];
        if (z == 0) break;
      }
      if (x == full) break;
    }
    return UniPoly::from_counts(counts);
  }
  const Gf2Matrix all_looped = a.toggle_diagonal(full);
  for (Subset x = 0;; ++x) {
    int nullity = 0;
    switch (which) {
      case PolyKind::q1: nullity = det_nullity(a, x).nullity; break;
      case PolyKind::q2: nullity = det_nullity(a.toggle_diagonal(x), full).nullity; break;
      case PolyKind::q3: nullity = det_nullity(all_looped, x).nullity; break;
      case PolyKind::Q1: break;
    }
    ++counts[nullity];
    if (x == full) break;
  }
  return UniPoly::from_counts(counts);
}

UniPoly marked_bracket(const Graph& g, Subset c, bool force) {
  g.ground().require_subset(c);
  guard(g.n(), kSubsetSumMaxN, force, "marked bracket");
  const Subset full = g.ground().full();
  std::vector<std::uint64_t> counts(g.n() + 1, 0);
  for (Subset x = 0;; ++x) {
    ++counts[det_nullity(g.adjacency().toggle_diagonal(x), x | c).nullity];
    if (x == full) break;
  }
  return UniPoly::from_counts(counts);
}

Graph induced(const Graph& g, Subset x) {
  return Graph(g.adjacency().principal(x));
}

Graph local_complement_simple(const Graph& g, std::size_t u) {
  if (u >= g.n()) throw DomainError("vertex index out of range");
  const Subset nb = g.neighbours(u);
  std::vector<Subset> rows = g.adjacency().rows();
  for (Subset rest = nb; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    rows[v] ^= nb & ~singleton(v);
  }
  return Graph(Gf2Matrix(g.ground(), std::move(rows)));
}

}  // namespace deltaflip
