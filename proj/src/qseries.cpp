#include "rsos/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rsos {

std::string to_string(QExponent e) {
  std::int64_t q = e.quarters;
  if (q % 4 == 0) return std::to_string(q / 4);
  if (q % 2 == 0) return std::to_string(q / 2) + "/2";
  return std::to_string(q) + "/4";
}

QSeries::QSeries(Terms terms, std::optional<QExponent> truncation)
    : truncation_(truncation) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
  enforce_truncation();
}

QSeries QSeries::one() { return monomial(QExponent(0)); }

QSeries QSeries::monomial(QExponent e, BigInt coeff) {
  QSeries s;
  if (coeff != 0) s.terms_.emplace(e, std::move(coeff));
  return s;
}

BigInt QSeries::coefficient(QExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

QExponent QSeries::lowest() const {
  if (terms_.empty()) throw std::domain_error("zero series has no lowest exponent");
  return terms_.begin()->first;
}

QExponent QSeries::highest() const {
  if (terms_.empty()) throw std::domain_error("zero series has no highest exponent");
  return terms_.rbegin()->first;
}

void QSeries::add_term(QExponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QSeries::enforce_truncation() {
  if (!truncation_) return;
  terms_.erase(terms_.upper_bound(*truncation_), terms_.end());
}

QSeries QSeries::truncated(QExponent order) const {
  QSeries out = *this;
  if (!out.truncation_ || order < *out.truncation_) out.truncation_ = order;
  out.enforce_truncation();
  return out;
}

QSeries QSeries::shifted(QExponent e) const {
  QSeries out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
  if (truncation_) out.truncation_ = *truncation_ + e;
  return out;
}

QSeries QSeries::scaled(const BigInt& c) const {
  if (c == 0) return QSeries({}, truncation_);
  QSeries out = *this;
  for (auto& [k, v] : out.terms_) v *= c;
  return out;
}

namespace {

std::optional<QExponent> tighter(std::optional<QExponent> a, std::optional<QExponent> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& o) {
  truncation_ = tighter(truncation_, o.truncation_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  enforce_truncation();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  truncation_ = tighter(truncation_, o.truncation_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  enforce_truncation();
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // A truncated factor is known through T; the product is known through
  // T + (lowest order of the other factor).
  std::optional<QExponent> trunc;
  auto bound = [](const QSeries& t, const QSeries& other) -> std::optional<QExponent> {
    if (!t.truncation()) return std::nullopt;
    if (other.is_zero()) return other.truncation() ? std::optional(*t.truncation() + *other.truncation())
                                                   : std::nullopt;
    return *t.truncation() + other.lowest();
  };
  if (!(a.is_zero() && a.is_exact()) && !(b.is_zero() && b.is_exact())) {
    trunc = tighter(bound(a, b), bound(b, a));
  }
  QSeries out;
  out.truncation_ = trunc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      QExponent e = ea + eb;
      if (trunc && e > *trunc) break;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (e.quarters == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag;
    os << "q";
    if (e.quarters != 4) {
      std::string ex = to_string(e);
      if (e.is_integral() && e.quarters > 0) {
        os << "^" << ex;
      } else {
        os << "^(" << ex << ")";
      }
    }
  }
  if (first) os << "0";
  if (s.truncation()) os << " (through q^" << to_string(*s.truncation()) << ")";
  return os.str();
}

DivisionResult divide(const QSeries& num, const QSeries& den) {
  if (den.is_zero()) throw std::domain_error("division by zero series");
  if (!num.is_exact() || !den.is_exact()) throw std::invalid_argument("divide requires exact series");
  QSeries rem = num;
  QSeries quo;
  const QExponent dlead = den.highest();
  const BigInt& dcoef = den.terms().rbegin()->second;
  while (!rem.is_zero() && rem.highest() >= dlead) {
    const BigInt& rcoef = rem.terms().rbegin()->second;
    if (rcoef % dcoef != 0) break;
    QSeries t = QSeries::monomial(rem.highest() - dlead, rcoef / dcoef);
    quo += t;
    rem -= t * den;
  }
  return {quo, rem};
}

QSeries qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial needs n >= 0");
  QSeries out = QSeries::one();
  for (int k = 1; k <= n; ++k) {
    out = out * (QSeries::one() - QSeries::monomial(QExponent::whole(k)));
  }
  return out;
}

QSeries qmultinomial(int n, int l, int m) {
  if (n < 0 || l < 0 || m < 0 || n - l - m < 0) return {};
  QSeries q = qfactorial(n);
  for (int k : {l, m, n - l - m}) {
    auto [quo, rem] = divide(q, qfactorial(k));
    if (!rem.is_zero()) throw std::logic_error("q-multinomial division left a remainder");
    q = std::move(quo);
  }
  return q;
}

QSeries qtrinomial_T(int N, int k) {
  if (N < 0) throw std::invalid_argument("qtrinomial_T needs N >= 0");
  QSeries out;
  for (int j = std::max(0, -k); 2 * j + k <= N; ++j) {
    out += qmultinomial(N, j, j + k).shifted(QExponent::whole(std::int64_t(j) * (j + k)));
  }
  return out;
}

QSeries inv_euler_product(QExponent K) {
  if (K.quarters < 0) throw std::invalid_argument("inv_euler_product needs K >= 0");
  const std::int64_t n = K.floor_whole();
  std::vector<BigInt> p(n + 1, BigInt(0));
  p[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part) {
    for (std::int64_t t = part; t <= n; ++t) p[t] += p[t - part];
  }
  QSeries::Terms terms;
  for (std::int64_t t = 0; t <= n; ++t) terms.emplace(QExponent::whole(t), p[t]);
  return QSeries(std::move(terms), K);
}

std::pair<QSeries, QExponent> normalize(const QSeries& s) {
  if (s.is_zero()) throw std::invalid_argument("cannot normalize zero series");
  QExponent low = s.lowest();
  return {s.shifted(-low), low};
}

BigInt eval_q1(const QSeries& s) {
  if (!s.is_exact()) throw std::invalid_argument("eval_q1 requires an exact series");
  BigInt total = 0;
  for (const auto& [e, c] : s.terms()) total += c;
  return total;
}

std::optional<QExponent> first_difference(const QSeries& a, const QSeries& b) {
  std::optional<QExponent> limit = tighter(a.truncation(), b.truncation());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    std::optional<QExponent> e;
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      e = ia->first;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      e = ib->first;
    } else if (ia->second != ib->second) {
      e = ia->first;
    }
    if (e) return (limit && *e > *limit) ? std::nullopt : e;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace rsos
