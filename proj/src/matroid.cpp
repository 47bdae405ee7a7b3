#include "deltaflip/matroid.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "deltaflip/delta_matroid.hpp"
#include "deltaflip/errors.hpp"

namespace deltaflip {

Matroid::Matroid(SetSystem bases, std::optional<BinaryMatrix> representation)
    : bases_(std::move(bases)), representation_(std::move(representation)) {
  const Classification c = classify(bases_);
  if (!c.proper) throw NotAMatroidError("a matroid needs at least one basis");
  if (!c.equicardinal) throw NotAMatroidError("bases " + bases_.format() + " are not equicardinal");
  if (!is_delta_matroid(bases_)) throw NotAMatroidError("bases " + bases_.format() + " violate the exchange axiom");
  if (representation_ && !(representation_->columns == bases_.ground())) {
    throw DomainError("representation columns do not match the ground set");
  }
}

RankNullity rank_nullity(const Matroid& m, Subset x) {
  m.ground().require_subset(x);
  int best = cardinality(x);
  for (Subset b : m.bases().family()) best = std::min(best, cardinality(x & ~b));
  return {cardinality(x) - best, best};
}

namespace {

/// r(X) for every X, from the down-closure of the bases.
std::vector<std::uint8_t> rank_table(const Matroid& m) {
  const std::size_t n = m.n();
  const Subset full = m.ground().full();
  std::vector<char> independent(std::size_t{1} << n, 0);
  for (Subset b : m.bases().family()) independent[b] = 1;
  for (Subset x = full;; --x) {
    if (!independent[x]) {
      for (Subset rest = full & ~x; rest != 0; rest &= rest - 1) {
        if (independent[x | (rest & -rest)]) {
          independent[x] = 1;
          break;
        }
      }
    }
    if (x == 0) break;
  }
  std::vector<std::uint8_t> rank(independent.size(), 0);
  for (Subset x = 1; x <= full; ++x) {
    if (independent[x]) {
      rank[x] = static_cast<std::uint8_t>(cardinality(x));
      continue;
    }
    for (Subset rest = x; rest != 0; rest &= rest - 1) {
      rank[x] = std::max(rank[x], rank[x & ~(rest & -rest)]);
    }
  }
  return rank;
}

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

BiPoly tutte(const Matroid& m, bool force) {
  if (m.n() > 26 || (!force && m.n() > kTutteMaxN)) {
    throw SizeGuardError("rank-sum Tutte polynomial enumerates 2^n subsets; n = " + std::to_string(m.n()));
  }
  const auto rank = rank_table(m);
  const int rv = m.rank();
  const int n = static_cast<int>(m.n());
  // counts[a][b] = #X with r(V)-r(X) = a and n(X) = b
  std::vector<std::vector<std::uint64_t>> counts(rv + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (Subset x = 0; x < rank.size(); ++x) {
    ++counts[rv - rank[x]][cardinality(x) - rank[x]];
  }
  BiPoly out;
  for (int a = 0; a <= rv; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (counts[a][b] == 0) continue;
      // (x-1)^a (y-1)^b
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          BigInt c = binomial(a, i) * binomial(b, j) * counts[a][b];
          if ((a - i + b - j) % 2 != 0) c = -c;
          out.add_term(i, j, c);
        }
      }
    }
  }
  return out;
}

namespace {

BiPoly tutte_dc_rec(const SetSystem& m, std::unordered_map<SetSystem, BiPoly, SetSystemHash>& memo) {
  if (m.n() == 0) return BiPoly::constant(1);
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  const Subset u = singleton(0);
  const SetSystem deleted = delete_elements(m, u);
  const SetSystem contracted = delete_elements(pivot(m, u), u);
  BiPoly out;
  if (contracted.empty()) {
    out = tutte_dc_rec(deleted, memo).times_y();
  } else if (deleted.empty()) {
    out = tutte_dc_rec(contracted, memo).times_x();
  } else {
    out = tutte_dc_rec(deleted, memo) + tutte_dc_rec(contracted, memo);
  }
  memo.emplace(m, out);
  return out;
}

}  // namespace

BiPoly tutte_dc(const Matroid& m) {
  std::unordered_map<SetSystem, BiPoly, SetSystemHash> memo;
  return tutte_dc_rec(m.bases(), memo);
}

DiagonalCheck tutte_diagonal_check(const Matroid& m) {
  DiagonalCheck out;
  out.via_tutte = tutte(m).diagonal();
  out.via_q1 = poly_direct(m.bases(), PolyKind::q1).shifted(-1);
  out.equal = out.via_tutte == out.via_q1;
  return out;
}

Matroid binary_matroid_from_matrix(const BinaryMatrix& r, bool force) {
  r.validate();
  const std::size_t n = r.columns.size();
  if (n > 26 || (!force && n > kSupportMaxN)) {
    throw SizeGuardError("binary matroid enumerates 2^n column sets; n = " + std::to_string(n));
  }
  const int rank = r.rank();
  std::vector<Subset> bases;
  std::vector<Subset> masked(r.rows.size());
  const Subset full = r.columns.full();
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == rank) {
      for (std::size_t i = 0; i < r.rows.size(); ++i) masked[i] = r.rows[i] & s;
      if (gf2_rank(masked) == rank) bases.push_back(s);
    }
    if (s == full) break;
  }
  return Matroid(SetSystem::from_canonical(r.columns, std::move(bases)), r);
}

int bicycle_dimension(const BinaryMatrix& r) {
  r.validate();
  std::vector<Subset> both = kernel_basis(r);
  const int cycle_dim = static_cast<int>(both.size());
  const int cocycle_dim = r.rank();
  both.insert(both.end(), r.rows.begin(), r.rows.end());
  return cycle_dim + cocycle_dim - gf2_rank(both);
}

EvaluationShape tutte_evaluations(const Matroid& m, long long p) {
  const int d = distance(full_flip_explicit(m.bases(), FlipKind::DualPivot), 0);
  const BigInt at = p - 1;
  return evaluation_shape(tutte(m).evaluate(at, at), p, d, m.n());
}

Graph fundamental_graph(const BinaryMatrix& r, Subset basis) {
  r.validate();
  r.columns.require_subset(basis);
  std::vector<Subset> masked;
  for (Subset row : r.rows) masked.push_back(row & basis);
  const int rank = r.rank();
  if (cardinality(basis) != rank || gf2_rank(masked) != rank) {
    throw DomainError(r.columns.format(basis) + " is not a basis of the column matroid");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (Subset rest = r.columns.full() & ~basis; rest != 0; rest &= rest - 1) {
    const Subset e = rest & -rest;
    const auto circuit = kernel_basis(r, basis | e);
    // B spans e, so B + e holds exactly one circuit
    const Subset c = circuit.at(0);
    for (Subset bs = c & basis; bs != 0; bs &= bs - 1) {
      edges.emplace_back(static_cast<std::size_t>(std::countr_zero(bs)),
                         static_cast<std::size_t>(std::countr_zero(e)));
    }
  }
  return Graph::from_edges(r.columns, edges);
}

Graph fundamental_graph(const Matroid& m, Subset basis) {
  if (!m.representation()) throw DomainError("fundamental graph needs a binary representation");
  if (!m.bases().contains(basis)) throw DomainError(m.ground().format(basis) + " is not a basis");
  return fundamental_graph(*m.representation(), basis);
}

}  // namespace deltaflip
