#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaflip/polynomial.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// The four single-variable specialisations of the multivariate polynomial.
enum class PolyKind { Q1, q1, q2, q3 };

std::string to_string(PolyKind kind);
/// Accepts "Q1", "q1", "q2", "q3".
std::optional<PolyKind> parse_poly_kind(const std::string& text);

/// One monomial a_A b_B c_C y^d of the multivariate polynomial. A is the
/// complement of B | C and is not stored.
struct QEntry {
  Subset b = 0;
  Subset c = 0;
  int exponent = 0;
  friend bool operator==(const QEntry&, const QEntry&) = default;
};

/// Q(M): one entry per ordered partition (A, B, C) of the ground set, with
/// exponent d_{M*B~*C}. Entries are sorted by (b, c).
class MultiQPoly {
 public:
  MultiQPoly(GroundSet ground, std::vector<QEntry> entries);

  const GroundSet& ground() const { return ground_; }
  const std::vector<QEntry>& entries() const { return entries_; }
  /// Exponent of the monomial for partition (V - B - C, B, C).
  int exponent(Subset b, Subset c) const;

  friend bool operator==(const MultiQPoly&, const MultiQPoly&) = default;

 private:
  GroundSet ground_;
  std::vector<QEntry> entries_;
};

/// Size caps for the exponential enumerations; exceeded only with `force`.
inline constexpr std::size_t kMultiQMaxN = 14;
inline constexpr std::size_t kSubsetSumMaxN = 20;

/// Materialises all 3^n monomials. Throws ImproperSystemError on an empty family.
MultiQPoly multivariate_Q(const SetSystem& m, bool force = false);

/// Weighted substitution: Q1 keeps every monomial, q1 sets c := 0, q2 sets
/// a := 0, q3 sets b := 0.
UniPoly specialize(const MultiQPoly& q, PolyKind kind);

/// The explicit subset sums, without building Q:
///   q1 = sum_X y^{d_M(X)},  q2 = sum_X y^{d_{M+X}(V)},  q3 = sum_X y^{d_{M+X}(X)},
///   Q1 = sum_X sum_{Z subset X} y^{d_{M+Z}(X)}.
UniPoly poly_direct(const SetSystem& m, PolyKind kind, bool force = false);

/// Relabels the monomials of Q(M) into Q(M flip Y) without recomputing distances.
MultiQPoly permute_Q_under_flip(const MultiQPoly& q, FlipKind kind, Subset y);

inline BigInt evaluate(const UniPoly& p, const BigInt& y) { return p.evaluate(y); }

/// Decomposition value = k (-2)^d of an evaluation f(p - 2) (p = 0 stands
/// for the evaluation at -2 itself), with the parity and congruence checks
/// on k against (-1)^n.
struct EvaluationShape {
  long long p = 0;
  BigInt value;
  int d = 0;
  bool divisible = false;
  /// value / (-2)^d; zero when not divisible.
  BigInt k;
  bool k_odd = false;
  /// k = (-1)^n (mod |p|); for p = 0, k = (-1)^n exactly.
  bool congruent = false;
  /// The same modulo |p| / 2.
  bool congruent_half = false;

  bool holds() const { return divisible && k_odd && congruent; }
};

EvaluationShape evaluation_shape(const BigInt& value, long long p, int d, std::size_t n);

}  // namespace deltaflip
