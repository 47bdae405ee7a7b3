#include "deltaflip/interlace.hpp"

#include <algorithm>
#include <cmath>

#include "deltaflip/errors.hpp"

namespace deltaflip {

namespace {

void guard(const SetSystem& m, std::size_t cap, bool force, const char* what) {
  if (m.empty()) throw ImproperSystemError(std::string(what) + " requires a proper set system");
  if (!force && m.n() > cap) {
    throw SizeGuardError(std::string(what) + " refused for n = " + std::to_string(m.n()) +
                         " (cap " + std::to_string(cap) + "); use force to override");
  }
  if (m.n() > 26) throw SizeGuardError(std::string(what) + " cannot enumerate beyond n = 26");
}

void bump(std::vector<std::uint64_t>& counts, std::size_t d) {
  if (counts.size() <= d) counts.resize(d + 1);
  ++counts[d];
}

bool entry_less(const QEntry& a, const QEntry& b) {
  return a.b != b.b ? a.b < b.b : a.c < b.c;
}

}  // namespace

std::string to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::Q1: return "Q1";
    case PolyKind::q1: return "q1";
    case PolyKind::q2: return "q2";
    case PolyKind::q3: return "q3";
  }
  return "?";
}

std::optional<PolyKind> parse_poly_kind(const std::string& text) {
  if (text == "Q1") return PolyKind::Q1;
  if (text == "q1") return PolyKind::q1;
  if (text == "q2") return PolyKind::q2;
  if (text == "q3") return PolyKind::q3;
  return std::nullopt;
}

MultiQPoly::MultiQPoly(GroundSet ground, std::vector<QEntry> entries)
    : ground_(std::move(ground)), entries_(std::move(entries)) {
  const Subset full = ground_.full();
  for (const QEntry& e : entries_) {
    if ((e.b & e.c) != 0 || ((e.b | e.c) & ~full) != 0) {
      throw DomainError("multivariate monomial key is not an ordered partition of the ground set");
    }
  }
  std::sort(entries_.begin(), entries_.end(), entry_less);
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(), [](const QEntry& a, const QEntry& b) {
    return a.b == b.b && a.c == b.c;
  });
  if (dup != entries_.end()) throw DomainError("duplicate multivariate monomial key");
}

int MultiQPoly::exponent(Subset b, Subset c) const {
  const QEntry key{b, c, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, entry_less);
  if (it == entries_.end() || it->b != b || it->c != c) throw DomainError("no monomial for this partition");
  return it->exponent;
}

MultiQPoly multivariate_Q(const SetSystem& m, bool force) {
  guard(m, kMultiQMaxN, force, "multivariate Q");
  const Subset full = m.ground().full();
  std::vector<QEntry> entries;
  entries.reserve(static_cast<std::size_t>(std::pow(3.0, static_cast<double>(m.n()))));
  // d_{M*B~*C} = d_{M~*C}(B) since B and C are disjoint
  for (Subset c = 0;; c = (c - full) & full) {
    const auto table = distance_table(dual_pivot(m, c));
    const Subset free = full & ~c;
    for (Subset b = 0;; b = (b - free) & free) {
      entries.push_back({b, c, table[b]});
      if (b == free) break;
    }
    if (c == full) break;
  }
  return MultiQPoly(m.ground(), std::move(entries));
}

UniPoly specialize(const MultiQPoly& q, PolyKind kind) {
  const Subset full = q.ground().full();
  std::vector<std::uint64_t> counts;
  for (const QEntry& e : q.entries()) {
    bool keep = true;
    switch (kind) {
      case PolyKind::Q1: break;
      case PolyKind::q1: keep = e.c == 0; break;
      case PolyKind::q2: keep = (e.b | e.c) == full; break;
      case PolyKind::q3: keep = e.b == 0; break;
    }
    if (keep) bump(counts, static_cast<std::size_t>(e.exponent));
  }
  return UniPoly::from_counts(counts);
}

UniPoly poly_direct(const SetSystem& m, PolyKind kind, bool force) {
  guard(m, kind == PolyKind::Q1 ? kMultiQMaxN : kSubsetSumMaxN, force, "interlace polynomial");
  const Subset full = m.ground().full();
  std::vector<std::uint64_t> counts;
  switch (kind) {
    case PolyKind::q1: {
      for (std::uint8_t d : distance_table(m)) bump(counts, d);
      break;
    }
    case PolyKind::q2:
    case PolyKind::q3: {
      for (Subset x = 0;; ++x) {
        const SetSystem flipped = loop_complement(m, x);
        bump(counts, static_cast<std::size_t>(distance(flipped, kind == PolyKind::q2 ? full : x)));
        if (x == full) break;
      }
      break;
    }
    case PolyKind::Q1: {
      // subset-of-subset iteration: Z, then every X containing Z
      for (Subset z = 0;; ++z) {
        const auto table = distance_table(loop_complement(m, z));
        const Subset free = full & ~z;
        for (Subset s = 0;; s = (s - free) & free) {
          bump(counts, table[z | s]);
          if (s == free) break;
        }
        if (z == full) break;
      }
      break;
    }
  }
  return UniPoly::from_counts(counts);
}

MultiQPoly permute_Q_under_flip(const MultiQPoly& q, FlipKind kind, Subset y) {
  q.ground().require_subset(y);
  const Subset full = q.ground().full();
  std::vector<QEntry> entries;
  entries.reserve(q.entries().size());
  for (const QEntry& e : q.entries()) {
    const Subset a = full & ~(e.b | e.c);
    QEntry moved = e;
    switch (kind) {
      case FlipKind::LoopComplement: {  // swap B and C outside A
        const Subset yp = y & ~a;
        moved.b = e.b ^ yp;
        moved.c = e.c ^ yp;
        break;
      }
      case FlipKind::DualPivot: {  // swap A and C outside B
        const Subset yp = y & ~e.b;
        moved.c = e.c ^ yp;
        break;
      }
      case FlipKind::Pivot: {  // swap A and B outside C
        const Subset yp = y & ~e.c;
        moved.b = e.b ^ yp;
        break;
      }
    }
    entries.push_back(moved);
  }
  return MultiQPoly(q.ground(), std::move(entries));
}

EvaluationShape evaluation_shape(const BigInt& value, long long p, int d, std::size_t n) {
  if (p % 2 != 0) throw DomainError("evaluation point p must be even");
  if (d < 0) throw DomainError("distance must be non-negative");
  EvaluationShape out;
  out.p = p;
  out.value = value;
  out.d = d;
  BigInt divisor = 1;
  for (int i = 0; i < d; ++i) divisor *= -2;
  out.divisible = value % divisor == 0;
  if (!out.divisible) return out;
  out.k = value / divisor;
  out.k_odd = out.k % 2 != 0;
  const BigInt sign = n % 2 == 0 ? 1 : -1;
  const BigInt diff = out.k - sign;
  const long long modulus = p < 0 ? -p : p;
  if (modulus == 0) {
    out.congruent = out.congruent_half = diff == 0;
  } else {
    out.congruent = diff % modulus == 0;
    out.congruent_half = diff % (modulus / 2) == 0;
  }
  return out;
}

}  // namespace deltaflip
