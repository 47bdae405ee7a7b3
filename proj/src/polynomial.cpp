#include "deltaflip/polynomial.hpp"

#include <algorithm>

namespace deltaflip {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string monomial_text(const BigInt& magnitude, const std::string& vars) {
  if (vars.empty()) return to_decimal(magnitude);
  if (magnitude == 1) return vars;
  return to_decimal(magnitude) + vars;
}

std::string power_text(const char* var, int d) {
  if (d == 0) return "";
  if (d == 1) return var;
  return std::string(var) + "^" + std::to_string(d);
}

std::string join_signed(const std::vector<std::pair<BigInt, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, vars] = terms[i];
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (i == 0) {
      out += (c < 0 ? "-" : "") + monomial_text(magnitude, vars);
    } else {
      out += (c < 0 ? " - " : " + ") + monomial_text(magnitude, vars);
    }
  }
  return out;
}

}  // namespace

std::string to_decimal(const BigInt& v) { return v.str(); }

UniPoly::UniPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(BigInt c) { return UniPoly(std::vector<BigInt>{std::move(c)}); }

UniPoly UniPoly::monomial(std::size_t degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_power(long long a, std::size_t n) {
  std::vector<BigInt> v(n + 1);
  BigInt apow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    // coefficient of y^(n-k) is C(n,k) a^k
    v[n - k] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * apow;
    apow *= a;
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> v(counts.begin(), counts.end());
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPoly::evaluate(const BigInt& y) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

UniPoly UniPoly::shifted(long long a) const {
  UniPoly out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    UniPoly term = linear_power(a, d);
    for (auto& c : term.coeffs_) c *= coeffs_[d];
    out += term;
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::to_array_string() const {
  if (coeffs_.empty()) return "[0]";
  std::string out = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += ',';
    out += to_decimal(coeffs_[d]);
  }
  return out + "]";
}

std::string UniPoly::to_string() const {
  std::vector<std::pair<BigInt, std::string>> terms;
  for (int d = degree(); d >= 0; --d) {
    if (coeffs_[d] != 0) terms.emplace_back(coeffs_[d], power_text("y", d));
  }
  return join_signed(terms);
}

BiPoly BiPoly::constant(BigInt c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BigInt BiPoly::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(int dx, int dy, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly BiPoly::times_x() const {
  BiPoly p;
  for (const auto& [key, c] : terms_) p.terms_.emplace(Key{key.first + 1, key.second}, c);
  return p;
}

BiPoly BiPoly::times_y() const {
  BiPoly p;
  for (const auto& [key, c] : terms_) p.terms_.emplace(Key{key.first, key.second + 1}, c);
  return p;
}

BigInt BiPoly::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt acc = 0;
  for (const auto& [key, c] : terms_) {
    acc += c * boost::multiprecision::pow(x, key.first) * boost::multiprecision::pow(y, key.second);
  }
  return acc;
}

UniPoly BiPoly::diagonal() const {
  UniPoly out;
  for (const auto& [key, c] : terms_) out += UniPoly::monomial(key.first + key.second, c);
  return out;
}

std::string BiPoly::to_string() const {
  // total degree descending, then x-degree descending
  std::vector<std::pair<Key, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::vector<std::pair<BigInt, std::string>> terms;
  for (const auto& [key, c] : ordered) {
    terms.emplace_back(c, power_text("x", key.first) + power_text("y", key.second));
  }
  return join_signed(terms);
}

}  // namespace deltaflip
