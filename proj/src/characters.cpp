#include "rsos/characters.hpp"

#include "rsos/onedsum.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace rsos {

Sector sector(const ModelSpec& spec, int r, int s) {
  const Heights h = sector_map(spec, r, s);
  return {r, s, h.a, h.b, h.c, s % 2};
}

std::vector<Sector> all_sectors(const ModelSpec& spec) {
  std::vector<Sector> out;
  for (int r = 1; r < spec.m(); ++r)
    for (int s = 1; s < spec.m_prime(); ++s) out.push_back(sector(spec, r, s));
  return out;
}

namespace {

class TrinomialRow {
 public:
  explicit TrinomialRow(int N) : N_(N) {}
  const QSeries& operator()(std::int64_t k) {
    static const QSeries zero;
    if (k > N_ || k < -N_) return zero;
    const std::int64_t key = k < 0 ? -k : k;  // T_k = T_{-k}
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, qtrinomial_T(N_, static_cast<int>(key))).first;
    return it->second;
  }

 private:
  int N_;
  std::map<std::int64_t, QSeries> cache_;
};

}  // namespace

QSeries bosonic_finitized(const ModelSpec& spec, int r, int s, int N) {
  const Sector sec = sector(spec, r, s);
  const std::int64_t m = spec.m(), mp = spec.m_prime();
  const std::int64_t lo = (sec.b - sec.a) / 2, hi = (sec.b + sec.a) / 2;
  TrinomialRow T(N);
  QSeries out;
  // A term survives only if |k m' + lo| <= N or |k m' + hi| <= N.
  const std::int64_t kmin = -(N + hi) / mp - 1, kmax = (N + hi) / mp + 1;
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const QSeries& t1 = T(k * mp + lo);
    if (!t1.is_zero()) out += t1.shifted(QExponent::whole(k * (k * m * mp + mp * r - m * s)));
    const QSeries& t2 = T(k * mp + hi);
    if (!t2.is_zero()) out -= t2.shifted(QExponent::whole((k * m + r) * (k * mp + s)));
  }
  return out;
}

namespace {

std::optional<QExponent> low_or_none(const QSeries& s) {
  return s.is_zero() ? std::nullopt : std::optional(s.lowest());
}

QSeries normalized_or_zero(const QSeries& s) { return s.is_zero() ? s : normalize(s).first; }

}  // namespace

BosonicReport verify_bosonic(const ModelSpec& spec, int N_max) {
  const std::vector<Sector> sectors = all_sectors(spec);
  BosonicReport rep{spec, true, {}};
  OneDimSums sums(local_energy_n2(spec));
  for (int N = 0; N <= N_max; ++N) {
    sums.advance_to(N);
    for (const Sector& sec : sectors) {
      SectorCheck chk;
      chk.r = sec.r;
      chk.s = sec.s;
      chk.N = N;
      const QSeries& x = sums.X(sec.a, sec.b, sec.c);
      const QSeries xb = bosonic_finitized(spec, sec.r, sec.s, N);
      chk.gamma_lattice = low_or_none(x);
      chk.gamma_bosonic = low_or_none(xb);
      chk.lattice = normalized_or_zero(x);
      chk.bosonic = normalized_or_zero(xb);
      chk.pass = chk.lattice == chk.bosonic;
      rep.pass = rep.pass && chk.pass;
      rep.checks.push_back(std::move(chk));
    }
  }
  return rep;
}

KacReport kac_symmetry_check(const ModelSpec& spec, int N) {
  KacReport rep;
  const int m = spec.m(), mp = spec.m_prime();
  for (int r = 1; r < m; ++r) {
    for (int s = 1; s < mp; ++s) {
      if (2 * r == m && 2 * s == mp) {
        ++rep.self_conjugate_skipped;
        continue;
      }
      const Sector x = sector(spec, r, s);
      const Sector y = sector(spec, m - r, mp - s);
      const bool reflected = y.a == mp - x.a && y.b == mp - x.b && y.c == mp - x.c;
      for (int n = 0; n <= N; ++n) {
        const bool eq = bosonic_finitized(spec, r, s, n) == bosonic_finitized(spec, m - r, mp - s, n);
        rep.checks.push_back({r, s, n, reflected, eq});
        rep.pass = rep.pass && reflected && eq;
      }
    }
  }
  return rep;
}

QSeries virasoro_character(const ModelSpec& spec, int r, int s, int K) {
  if (K < 0) throw std::invalid_argument("truncation order must be >= 0");
  conformal_weight(spec, r, s);  // range check
  const std::int64_t m = spec.m(), mp = spec.m_prime();
  QSeries::Terms theta;
  // For k != 0 both exponents are at least |k|, so |k| <= K + 1 covers every order <= K.
  for (std::int64_t k = -K - 1; k <= K + 1; ++k) {
    const std::int64_t e1 = k * (k * m * mp + mp * r - m * s);
    const std::int64_t e2 = (k * m + r) * (k * mp + s);
    if (e1 <= K) theta[QExponent::whole(e1)] += 1;
    if (e2 <= K) theta[QExponent::whole(e2)] -= 1;
  }
  const QExponent order = QExponent::whole(K);
  return QSeries(std::move(theta), order) * inv_euler_product(order);
}

StabilizationReport stabilization_check(const ModelSpec& spec, int r, int s, const std::vector<int>& Ns) {
  StabilizationReport rep;
  std::vector<QSeries> normalized;
  std::int64_t top = 0;
  for (int N : Ns) {
    QSeries b = normalized_or_zero(bosonic_finitized(spec, r, s, N));
    if (!b.is_zero()) top = std::max(top, b.highest().floor_whole());
    normalized.push_back(std::move(b));
  }
  const QSeries chi = virasoro_character(spec, r, s, static_cast<int>(top + 1));
  int prevK = -1;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const QSeries& b = normalized[i];
    std::optional<QExponent> diff = first_difference(b, chi);
    int K = diff ? static_cast<int>(diff->floor_whole()) - 1 : static_cast<int>(top + 1);
    bool bounded = true;
    for (const auto& [e, c] : b.terms()) bounded = bounded && c >= 0 && c <= chi.coefficient(e);
    rep.points.push_back({Ns[i], K, bounded});
    if (i > 0 && K < prevK) rep.non_decreasing = false;
    rep.bounded = rep.bounded && bounded;
    prevK = K;
  }
  rep.pass = rep.non_decreasing && rep.bounded && !rep.points.empty() && rep.points.back().K >= 1;
  return rep;
}

std::pair<int, int> log_sector_heights(int p, int p_prime, int r, int s) {
  if (p < 1 || 2 * p >= p_prime || std::gcd(p, p_prime) != 1) {
    throw std::invalid_argument("logarithmic limit needs 1 <= p < p'/2 with gcd(p, p') = 1");
  }
  if (r < 1 || s < 1) throw std::invalid_argument("Kac labels must be positive");
  const int rho = r * p_prime / p;
  const int b = (rho % 2 == s % 2) ? rho : rho + 1;
  return {s, b};
}

QSeries log_finitized(int p, int p_prime, int r, int s, int N) {
  const auto [a, b] = log_sector_heights(p, p_prime, r, s);
  return qtrinomial_T(N, (b - a) / 2) - qtrinomial_T(N, (b + a) / 2).shifted(QExponent::whole(std::int64_t(r) * s));
}

QSeries kac_character(int r, int s, int K) {
  const QExponent order = QExponent::whole(K);
  QSeries num = QSeries::one() - QSeries::monomial(QExponent::whole(std::int64_t(r) * s));
  return num.truncated(order) * inv_euler_product(order);
}

LogLimitReport log_limit_check(int p, int p_prime, int r, int s, int N, int K) {
  const auto [a, b] = log_sector_heights(p, p_prime, r, s);
  LogLimitReport rep{p, p_prime, r, s, N, K, {}, false, false, std::nullopt};
  const QSeries target = log_finitized(p, p_prime, r, s, N);
  // Past m' > 2(N + b) every k != 0 trinomial index exceeds N.
  int past = 0;
  for (int t = 1; past < 3; ++t) {
    const int m = p * t, mp = p_prime * t + 1;
    if (std::gcd(m, mp) != 1 || r >= m || s >= mp) continue;
    const ModelSpec spec(m, mp, 2);
    const Heights h = sector_map(spec, r, s);
    const bool match = h.a == a && h.b == b;
    rep.sequence.push_back({m, mp, match, match && bosonic_finitized(spec, r, s, N) == target});
    if (mp > 2 * (N + b)) ++past;
  }
  rep.stabilized = true;
  for (std::size_t i = rep.sequence.size() - 3; i < rep.sequence.size(); ++i) {
    rep.stabilized = rep.stabilized && rep.sequence[i].equal;
  }
  const QExponent order = QExponent::whole(K);
  const auto [norm, gamma] = normalize(log_finitized(p, p_prime, r, s, K + (b + a) / 2));
  (void)gamma;
  const QSeries lhs = norm.truncated(order);
  const QSeries rhs = kac_character(r, s, K);
  rep.kac_first_difference = first_difference(lhs, rhs);
  rep.kac_pass = !rep.kac_first_difference.has_value();
  return rep;
}

const std::vector<GridEntry>& conjecture_grid() {
  static const std::vector<GridEntry> grid = {
      {2, 5, 12}, {2, 7, 12}, {3, 7, 12}, {3, 8, 12}, {2, 9, 11},  {4, 9, 11},
      {3, 10, 10}, {2, 11, 9}, {3, 11, 9}, {4, 11, 9}, {5, 11, 9},
  };
  return grid;
}

}  // namespace rsos
