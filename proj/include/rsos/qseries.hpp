#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace rsos {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent of q in units of 1/4.
struct QExponent {
  std::int64_t quarters = 0;

  constexpr QExponent() = default;
  constexpr explicit QExponent(std::int64_t q) : quarters(q) {}

  static constexpr QExponent whole(std::int64_t n) { return QExponent(4 * n); }
  static constexpr QExponent half(std::int64_t n) { return QExponent(2 * n); }

  constexpr bool is_integral() const { return quarters % 4 == 0; }
  // floor(quarters / 4)
  constexpr std::int64_t floor_whole() const {
    return quarters >= 0 ? quarters / 4 : -((-quarters + 3) / 4);
  }

  constexpr auto operator<=>(const QExponent&) const = default;

  constexpr QExponent operator+(QExponent o) const { return QExponent(quarters + o.quarters); }
  constexpr QExponent operator-(QExponent o) const { return QExponent(quarters - o.quarters); }
  constexpr QExponent operator-() const { return QExponent(-quarters); }
  constexpr QExponent operator*(std::int64_t k) const { return QExponent(quarters * k); }
  QExponent& operator+=(QExponent o) {
    quarters += o.quarters;
    return *this;
  }
};

std::string to_string(QExponent e);  // "5/2", "-1/4", "3"

/// Laurent polynomial in q^{1/4} with integer coefficients.  A truncated
/// series carries the highest order that is known; terms above it are dropped.
class QSeries {
 public:
  using Terms = std::map<QExponent, BigInt>;

  QSeries() = default;
  explicit QSeries(Terms terms, std::optional<QExponent> truncation = std::nullopt);

  static QSeries one();
  static QSeries monomial(QExponent e, BigInt coeff = 1);

  const Terms& terms() const { return terms_; }
  std::optional<QExponent> truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(QExponent e) const;
  QExponent lowest() const;   // throws on zero series
  QExponent highest() const;  // throws on zero series

  QSeries truncated(QExponent order) const;
  QSeries shifted(QExponent e) const;  // q^e * this
  QSeries scaled(const BigInt& c) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  // Equal terms and equal truncation marker.
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void add_term(QExponent e, const BigInt& c);
  void enforce_truncation();

  Terms terms_;
  std::optional<QExponent> truncation_;
};

std::string to_string(const QSeries& s);  // "1 + q + 2q^2 (through q^6)"

/// Result of exact division: quotient and remainder (remainder has lower degree).
struct DivisionResult {
  QSeries quotient;
  QSeries remainder;
};
/// Synthetic division of exact series whose exponents are whole and >= 0.
DivisionResult divide(const QSeries& num, const QSeries& den);

QSeries qfactorial(int n);
QSeries qmultinomial(int n, int l, int m);
QSeries qtrinomial_T(int N, int k);
/// 1/(q)_infinity truncated at order K (orders above K dropped).
QSeries inv_euler_product(QExponent K);

/// Returns (s / q^low, low) for nonzero s.
std::pair<QSeries, QExponent> normalize(const QSeries& s);
BigInt eval_q1(const QSeries& s);

/// Lowest exponent at which a and b differ, looking only at orders known to
/// both.  nullopt when they agree everywhere they are comparable.
std::optional<QExponent> first_difference(const QSeries& a, const QSeries& b);

}  // namespace rsos
