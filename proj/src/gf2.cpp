#include "deltaflip/gf2.hpp"

#include <algorithm>

#include "deltaflip/errors.hpp"

namespace deltaflip {

Gf2Matrix::Gf2Matrix(GroundSet ground, std::vector<Subset> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  if (rows_.size() != ground_.size()) throw DomainError("matrix must have one row per element");
  for (Subset r : rows_) ground_.require_subset(r);
}

Gf2Matrix Gf2Matrix::zero(GroundSet ground) {
  std::vector<Subset> rows(ground.size(), 0);
  return Gf2Matrix(std::move(ground), std::move(rows));
}

Gf2Matrix Gf2Matrix::identity(GroundSet ground) {
  std::vector<Subset> rows(ground.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = singleton(i);
  return Gf2Matrix(std::move(ground), std::move(rows));
}

Subset Gf2Matrix::diagonal() const {
  Subset d = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (contains(rows_[i], i)) d |= singleton(i);
  }
  return d;
}

bool Gf2Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Gf2Matrix Gf2Matrix::principal(Subset x) const {
  ground_.require_subset(x);
  std::vector<Subset> rows;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (contains(x, i)) rows.push_back(compress(rows_[i], x));
  }
  return Gf2Matrix(ground_.restrict(x), std::move(rows));
}

Gf2Matrix Gf2Matrix::toggle_diagonal(Subset x) const {
  ground_.require_subset(x);
  std::vector<Subset> rows = rows_;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (contains(x, i)) rows[i] ^= singleton(i);
  }
  return Gf2Matrix(ground_, std::move(rows));
}

int gf2_rank(std::span<const Subset> vectors) {
  // xor basis indexed by leading bit
  Subset basis[64] = {};
  int rank = 0;
  for (Subset v : vectors) {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (basis[lead] == 0) {
        basis[lead] = v;
        ++rank;
        break;
      }
      v ^= basis[lead];
    }
  }
  return rank;
}

DetNullity det_nullity(const Gf2Matrix& a, Subset x) {
  a.ground().require_subset(x);
  std::vector<Subset> rows;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (contains(x, i)) rows.push_back(a.rows()[i] & x);
  }
  const int nullity = cardinality(x) - gf2_rank(rows);
  return {nullity == 0, nullity};
}

Gf2Matrix ppt(const Gf2Matrix& a, Subset x) {
  a.ground().require_subset(x);
  const std::size_t n = a.n();
  const auto& rows = a.rows();
  const Subset outside = a.ground().full() & ~x;

  // Gauss-Jordan on [P | I] restricted to X; inverse rows live on X's bit positions.
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(x, i)) members.push_back(i);
  }
  std::vector<Subset> left;
  std::vector<Subset> right;
  for (std::size_t i : members) {
    left.push_back(rows[i] & x);
    right.push_back(singleton(i));
  }
  for (std::size_t col = 0; col < members.size(); ++col) {
    const Subset bit = singleton(members[col]);
    std::size_t pivot_row = col;
    while (pivot_row < left.size() && (left[pivot_row] & bit) == 0) ++pivot_row;
    if (pivot_row == left.size()) {
      throw PivotUndefinedError("pivot on " + a.ground().format(x) + " is undefined: A[X] is singular");
    }
    std::swap(left[col], left[pivot_row]);
    std::swap(right[col], right[pivot_row]);
    for (std::size_t r = 0; r < left.size(); ++r) {
      if (r != col && (left[r] & bit)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  // after elimination row col of `right` is row members[col] of P^-1
  std::vector<Subset> inverse(n, 0);
  for (std::size_t col = 0; col < members.size(); ++col) inverse[members[col]] = right[col];

  std::vector<Subset> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(x, i)) {
      // (P^-1 | P^-1 Q)
      Subset q_part = 0;
      for (Subset k = inverse[i]; k != 0; k &= k - 1) {
        q_part ^= rows[static_cast<std::size_t>(std::countr_zero(k))] & outside;
      }
      out[i] = inverse[i] | q_part;
    } else {
      // (R P^-1 | S + R P^-1 Q)
      Subset rp = 0;
      for (Subset k = rows[i] & x; k != 0; k &= k - 1) {
        rp ^= inverse[static_cast<std::size_t>(std::countr_zero(k))];
      }
      Subset s_part = rows[i] & outside;
      for (Subset k = rp; k != 0; k &= k - 1) {
        s_part ^= rows[static_cast<std::size_t>(std::countr_zero(k))] & outside;
      }
      out[i] = rp | s_part;
    }
  }
  return Gf2Matrix(a.ground(), std::move(out));
}

SetSystem support_set_system(const Gf2Matrix& a, bool force) {
  if (!force && a.n() > kSupportMaxN) {
    throw SizeGuardError("support set system enumerates 2^n minors; n = " + std::to_string(a.n()) +
                         " exceeds cap " + std::to_string(kSupportMaxN));
  }
  if (a.n() > 30) throw SizeGuardError("support set system cannot enumerate beyond n = 30");
  std::vector<Subset> family;
  const Subset full = a.ground().full();
  for (Subset x = 0;; ++x) {
    if (det_nullity(a, x).det) family.push_back(x);
    if (x == full) break;
  }
  return SetSystem::from_canonical(a.ground(), std::move(family));
}

void BinaryMatrix::validate() const {
  for (Subset r : rows) columns.require_subset(r);
}

Gf2Matrix BinaryMatrix::to_square() const {
  if (rows.size() != columns.size()) {
    throw DomainError("expected a square matrix, got " + std::to_string(rows.size()) + "x" +
                      std::to_string(columns.size()));
  }
  return Gf2Matrix(columns, rows);
}

std::vector<Subset> kernel_basis(const BinaryMatrix& r, Subset columns_mask) {
  r.columns.require_subset(columns_mask);
  // reduced row echelon form on the selected columns
  std::vector<Subset> rows;
  for (Subset row : r.rows) {
    if (row & columns_mask) rows.push_back(row & columns_mask);
  }
  Subset pivots = 0;
  std::size_t rank = 0;
  for (Subset cols = columns_mask; cols != 0; cols &= cols - 1) {
    const Subset bit = cols & -cols;
    std::size_t p = rank;
    while (p < rows.size() && (rows[p] & bit) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != rank && (rows[k] & bit)) rows[k] ^= rows[rank];
    }
    pivots |= bit;
    ++rank;
  }
  std::vector<Subset> basis;
  for (Subset fcols = columns_mask & ~pivots; fcols != 0; fcols &= fcols - 1) {
    const Subset free_bit = fcols & -fcols;
    Subset v = free_bit;
    // each pivot variable equals the sum of the free entries in its row
    for (std::size_t k = 0; k < rank; ++k) {
      if (rows[k] & free_bit) v |= rows[k] & pivots & -(rows[k] & pivots);
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace deltaflip
