#pragma once

// Seeded generators and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles follow the definitions literally and avoid
// the library's shortcuts (distance tables, parity formulas, elimination).

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "deltaflip/delta_matroid.hpp"
#include "deltaflip/gf2.hpp"
#include "deltaflip/graph.hpp"
#include "deltaflip/matroid.hpp"
#include "deltaflip/polynomial.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

inline void PrintTo(const SetSystem& m, std::ostream* os) { *os << m.format(); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const BiPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace deltaflip

namespace testkit {

using namespace deltaflip;
using Rng = std::mt19937_64;
using Family = std::set<Subset>;

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
inline Subset random_subset(Rng& rng, std::size_t n, double p = 0.5) {
  Subset s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng, p)) s |= singleton(i);
  }
  return s;
}

inline SetSystem make(std::size_t n, const Family& f) {
  return SetSystem(GroundSet::numbered(n), std::vector<Subset>(f.begin(), f.end()));
}
inline SetSystem sys(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& sets) {
  GroundSet g(std::move(ground));
  std::vector<Subset> family;
  for (const auto& s : sets) family.push_back(g.subset_of(s));
  return SetSystem(g, family);
}

/// ({p,q,r}, {{}, {p}, {p,q}, {q,r}, {r}}), the running example.
inline SetSystem m0() { return sys({"p", "q", "r"}, {{}, {"p"}, {"p", "q"}, {"q", "r"}, {"r"}}); }

/// Triangle on p, q, r with loops on p and r.
inline Graph triangle() {
  return Graph::from_edges(GroundSet({"p", "q", "r"}), {{0, 1}, {1, 2}, {0, 2}}, 0b101);
}

inline Family family_of(const SetSystem& m) { return Family(m.family().begin(), m.family().end()); }

// ---- oracles on families ----

inline Family o_pivot(const Family& m, Subset x) {
  Family out;
  for (Subset y : m) out.insert(y ^ x);
  return out;
}

inline Family o_loopc1(const Family& m, std::size_t u) {
  const Subset b = singleton(u);
  Family out = m;
  for (Subset z : m) {
    if (z & b) continue;
    if (!out.erase(z | b)) out.insert(z | b);
  }
  return out;
}

inline Family o_loopc(Family m, Subset x) {
  for (std::size_t u = 0; u < 64; ++u) {
    if (x >> u & 1) m = o_loopc1(m, u);
  }
  return m;
}

/// Dual pivot as the literal composite +u *u +u.
inline Family o_dual(Family m, Subset x) {
  for (std::size_t u = 0; u < 64; ++u) {
    if (x >> u & 1) m = o_loopc1(o_pivot(o_loopc1(m, u), singleton(u)), u);
  }
  return m;
}

inline int o_distance(const Family& m, Subset x) {
  int best = 1 << 20;
  for (Subset y : m) best = std::min(best, cardinality(x ^ y));
  return best;
}

inline bool o_is_delta_matroid(const Family& m) {
  if (m.empty()) return false;
  for (Subset x : m) {
    for (Subset y : m) {
      const Subset diff = x ^ y;
      for (Subset a = diff; a != 0; a &= a - 1) {
        const Subset ua = a & -a;
        bool ok = false;
        for (Subset b = diff; b != 0 && !ok; b &= b - 1) {
          const Subset vb = b & -b;
          ok = m.count(vb == ua ? x ^ ua : x ^ ua ^ vb) > 0;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

/// Q1, q1, q2, q3 summed over the partition monomials d_{M*B~*C}.
inline UniPoly o_poly(const Family& m, std::size_t n, char which) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  const Subset full = full_subset(n);
  for (Subset b = 0; b <= full; ++b) {
    for (Subset c = 0; c <= full; ++c) {
      if (b & c) continue;
      const Subset a = full & ~(b | c);
      const bool keep = which == 'Q' || (which == '1' && c == 0) || (which == '2' && a == 0) ||
                        (which == '3' && b == 0);
      if (keep) ++counts[o_distance(o_dual(o_pivot(m, b), c), 0)];
    }
  }
  return UniPoly::from_counts(counts);
}

// ---- oracles on matrices ----

/// Nullity of A[X] by counting kernel vectors.
inline int o_nullity(const std::vector<Subset>& rows, Subset x) {
  std::uint64_t kernel = 0;
  for (Subset v = x;; v = (v - 1) & x) {
    bool zero = true;
    for (Subset i = x; i != 0 && zero; i &= i - 1) {
      const auto r = static_cast<std::size_t>(std::countr_zero(i));
      zero = cardinality(rows[r] & v) % 2 == 0;
    }
    kernel += zero;
    if (v == 0) break;
  }
  int k = 0;
  while ((std::uint64_t{1} << k) < kernel) ++k;
  return k;
}

/// Matrix product over the two-element field of (n x n) matrices.
inline std::vector<Subset> o_multiply(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  std::vector<Subset> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[i] >> k & 1) out[i] ^= b[k];
    }
  }
  return out;
}

// ---- generators ----

inline Gf2Matrix random_symmetric(Rng& rng, std::size_t n, double p = 0.5) {
  std::vector<Subset> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (coin(rng, p)) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
    }
  }
  return Gf2Matrix(GroundSet::numbered(n), rows);
}

inline Gf2Matrix random_square(Rng& rng, std::size_t n) {
  std::vector<Subset> rows(n);
  for (auto& r : rows) r = random_subset(rng, n);
  return Gf2Matrix(GroundSet::numbered(n), rows);
}

inline Graph random_graph(Rng& rng, std::size_t n, double p = 0.5) { return Graph(random_symmetric(rng, n, p)); }

inline VertexFlipWord random_flip_word(Rng& rng, std::size_t n, int length) {
  VertexFlipWord w;
  for (int i = 0; i < length; ++i) {
    const FlipKind k = std::array{FlipKind::Pivot, FlipKind::LoopComplement, FlipKind::DualPivot}[pick(rng, 0, 2)];
    w.push_back({k, random_subset(rng, n)});
  }
  return w;
}

/// A vf-closed Δ-matroid: M_G for a random graph, moved by a random flip word.
inline SetSystem random_vf_closed(Rng& rng, std::size_t n) {
  const SetSystem mg = graph_to_system(random_graph(rng, n, pick(rng, 1, 9) / 10.0));
  return coin(rng) ? mg : apply_word(mg, random_flip_word(rng, n, pick(rng, 1, 3)));
}

/// Rejection-sampled Δ-matroid. Candidates come from random families, supports
/// of arbitrary square matrices and flipped graph systems, so the corpus
/// contains instances that are not vf-closed.
inline SetSystem random_delta_matroid(Rng& rng, std::size_t max_n = 6) {
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, static_cast<int>(max_n)));
    Family f;
    switch (pick(rng, 0, 3)) {
      case 0: {
        const int size = pick(rng, 1, 6);
        for (int i = 0; i < size; ++i) f.insert(random_subset(rng, n));
        break;
      }
      case 1:
        f = family_of(support_set_system(random_square(rng, n)));
        break;
      case 2: {
        // dense family: every subset with probability p
        const double p = pick(rng, 5, 9) / 10.0;
        for (Subset x = 0; x <= full_subset(n); ++x) {
          if (coin(rng, p)) f.insert(x);
        }
        break;
      }
      default:
        f = family_of(random_vf_closed(rng, n));
    }
    if (!f.empty() && o_is_delta_matroid(f)) return make(n, f);
  }
}

/// Binary matrix with `rows` random rows over `cols` labelled columns.
inline BinaryMatrix random_binary_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  BinaryMatrix r{GroundSet::numbered(cols), {}};
  for (std::size_t i = 0; i < rows; ++i) r.rows.push_back(random_subset(rng, cols));
  return r;
}

/// Vertex-edge incidence matrix of a random multigraph-free graph; columns are edges.
inline BinaryMatrix random_graphic(Rng& rng, std::size_t vertices, std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t m = std::min(max_edges, pairs.size());
  const std::size_t edges = static_cast<std::size_t>(pick(rng, 1, static_cast<int>(std::max<std::size_t>(m, 1))));
  BinaryMatrix r{GroundSet::numbered(std::min(edges, pairs.size())), std::vector<Subset>(vertices, 0)};
  for (std::size_t e = 0; e < r.columns.size(); ++e) {
    r.rows[pairs[e].first] |= singleton(e);
    r.rows[pairs[e].second] |= singleton(e);
  }
  return r;
}

inline Matroid uniform_matroid(std::size_t r, std::size_t n) {
  std::vector<Subset> bases;
  for (Subset x = 0; x <= full_subset(n); ++x) {
    if (static_cast<std::size_t>(cardinality(x)) == r) bases.push_back(x);
  }
  return Matroid(SetSystem(GroundSet::numbered(n), bases));
}

}  // namespace testkit
