#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace deltaflip {

using BigInt = boost::multiprecision::cpp_int;

/// Exact univariate polynomial in y with arbitrary-precision coefficients.
/// Stored densely in ascending degree; the leading coefficient is never zero,
/// so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> ascending);
  UniPoly(std::initializer_list<long long> ascending);

  static UniPoly constant(BigInt c);
  static UniPoly monomial(std::size_t degree, BigInt c = 1);
  /// (y + a)^n
  static UniPoly linear_power(long long a, std::size_t n);
  /// sum_d counts[d] y^d
  static UniPoly from_counts(const std::vector<std::uint64_t>& counts);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& y) const;
  /// p(y + a)
  UniPoly shifted(long long a) const;

  UniPoly& operator+=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// "[c0,c1,...]"; the zero polynomial prints as "[0]".
  std::string to_array_string() const;
  /// Human form, highest degree first: "y^2 + 10y + 16".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact bivariate polynomial in x, y: map (deg_x, deg_y) -> coefficient, no zero entries.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(BigInt c);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int dx, int dy) const;
  void add_term(int dx, int dy, const BigInt& c);

  BiPoly& operator+=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  BiPoly times_x() const;
  BiPoly times_y() const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  /// Substitutes x := y.
  UniPoly diagonal() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// "x^2 + x + y"
  std::string to_string() const;

 private:
  std::map<Key, BigInt> terms_;
};

/// Decimal string of a big integer.
std::string to_decimal(const BigInt& v);

}  // namespace deltaflip
