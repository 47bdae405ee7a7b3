#pragma once

#include <span>
#include <vector>

#include "deltaflip/ground_set.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// Square V x V matrix over the two-element field. Row i is a bitmask over
/// the ground set (bit j = entry (i, j)).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  /// Throws DomainError unless there is one row per element and every row fits the ground.
  Gf2Matrix(GroundSet ground, std::vector<Subset> rows);

  static Gf2Matrix zero(GroundSet ground);
  static Gf2Matrix identity(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  const std::vector<Subset>& rows() const { return rows_; }
  bool at(std::size_t i, std::size_t j) const { return contains(rows_.at(i), j); }
  Subset diagonal() const;
  bool is_symmetric() const;

  /// A[X], re-indexed over the sub-ground-set X.
  Gf2Matrix principal(Subset x) const;
  /// Adds the identity on X to the diagonal (loop complementation on graphs).
  Gf2Matrix toggle_diagonal(Subset x) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> rows_;
};

/// Rank of a set of bit vectors over the two-element field.
int gf2_rank(std::span<const Subset> vectors);

struct DetNullity {
  bool det = true;
  int nullity = 0;
  friend bool operator==(const DetNullity&, const DetNullity&) = default;
};

/// Determinant and nullity of the principal submatrix A[X]; the empty matrix has (1, 0).
DetNullity det_nullity(const Gf2Matrix& a, Subset x);

/// Principal pivot transform A*X. With A = (P Q; R S) and P = A[X] this is
/// (P^-1, P^-1 Q; R P^-1, S + R P^-1 Q) over the two-element field.
/// Throws PivotUndefinedError if A[X] is singular.
Gf2Matrix ppt(const Gf2Matrix& a, Subset x);

inline constexpr std::size_t kSupportMaxN = 20;

/// M_A = (V, {X : det A[X] = 1}).
SetSystem support_set_system(const Gf2Matrix& a, bool force = false);

/// Rectangular matrix with labelled columns, used as a binary matroid
/// representation. Each row is a bitmask over the columns.
struct BinaryMatrix {
  GroundSet columns;
  std::vector<Subset> rows;

  /// Throws DomainError if a row has bits outside the columns.
  void validate() const;
  int rank() const { return gf2_rank(rows); }
  /// Square matrices only; throws DomainError otherwise.
  Gf2Matrix to_square() const;
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

/// Basis of {x : R x = 0}, vectors over the columns. When `columns_mask` is
/// given, only those columns take part (the others are fixed to zero).
std::vector<Subset> kernel_basis(const BinaryMatrix& r, Subset columns_mask);
inline std::vector<Subset> kernel_basis(const BinaryMatrix& r) {
  return kernel_basis(r, r.columns.full());
}

}  // namespace deltaflip
