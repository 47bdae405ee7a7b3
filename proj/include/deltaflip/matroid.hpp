#pragma once

#include <optional>

#include "deltaflip/gf2.hpp"
#include "deltaflip/graph.hpp"
#include "deltaflip/interlace.hpp"
#include "deltaflip/polynomial.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// A matroid described by its bases.
class Matroid {
 public:
  Matroid() = default;
  /// Throws NotAMatroidError unless `bases` is proper, equicardinal and
  /// satisfies the exchange axiom.
  explicit Matroid(SetSystem bases, std::optional<BinaryMatrix> representation = std::nullopt);

  const SetSystem& bases() const { return bases_; }
  const GroundSet& ground() const { return bases_.ground(); }
  std::size_t n() const { return bases_.n(); }
  /// r(V), the common basis size.
  int rank() const { return cardinality(bases_.family().front()); }
  const std::optional<BinaryMatrix>& representation() const { return representation_; }

 private:
  SetSystem bases_;
  std::optional<BinaryMatrix> representation_;
};

struct RankNullity {
  int rank = 0;
  int nullity = 0;
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

/// n(X) = min |X - B| over bases, r(X) = |X| - n(X).
RankNullity rank_nullity(const Matroid& m, Subset x);

inline constexpr std::size_t kTutteMaxN = 20;

/// Rank-sum: sum_X (x-1)^{r(V)-r(X)} (y-1)^{n(X)}.
BiPoly tutte(const Matroid& m, bool force = false);
/// Deletion/contraction on the smallest element.
BiPoly tutte_dc(const Matroid& m);

struct DiagonalCheck {
  UniPoly via_tutte;
  UniPoly via_q1;
  bool equal = false;
};

/// t(y, y) against q1(y - 1).
DiagonalCheck tutte_diagonal_check(const Matroid& m);

/// Column matroid: bases are the independent column sets of size rank(R).
Matroid binary_matroid_from_matrix(const BinaryMatrix& r, bool force = false);

/// dim(C & C^perp) with C = ker R the cycle space and C^perp the row space.
int bicycle_dimension(const BinaryMatrix& r);

/// t(p-1, p-1) = k (-2)^{d_{M~*V}}; p = 0 evaluates t(-1, -1).
/// Throws ImproperSystemError if M~*V is empty.
EvaluationShape tutte_evaluations(const Matroid& m, long long p);

/// Bipartite graph between B and V - B with b ~ e iff b lies in the
/// fundamental circuit of e. Throws DomainError if B is not a basis.
Graph fundamental_graph(const BinaryMatrix& r, Subset basis);
/// Uses the matroid's representation; throws DomainError if it has none.
Graph fundamental_graph(const Matroid& m, Subset basis);

}  // namespace deltaflip
