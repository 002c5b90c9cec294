#include "rsos/model.hpp"

#include <numeric>
#include <stdexcept>

namespace rsos {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ModelSpec::ModelSpec(int m, int m_prime, int fusion_n) : m_(m), m_prime_(m_prime), fusion_(fusion_n) {
  if (m < 2 || m_prime <= m || std::gcd(m, m_prime) != 1) {
    throw std::invalid_argument("invalid model (" + std::to_string(m) + "," + std::to_string(m_prime) +
                                "): need 2 <= m < m' with gcd(m, m') = 1");
  }
  if (fusion_n == 3) throw std::invalid_argument("fusion level 3 is not supported (3x3 local energies are out of scope)");
  if (fusion_n != 1 && fusion_n != 2) throw std::invalid_argument("fusion level must be 1 or 2");
  // lambda = pi/n would need n(m'-m) = m', impossible for coprime m, m' >= 2.
  if (fusion_ * (m_prime_ - m_) == m_prime_) throw std::logic_error("lambda = pi/n for a coprime pair");
}

std::string describe(const ModelSpec& spec) {
  return "RSOS(" + std::to_string(spec.m()) + "," + std::to_string(spec.m_prime()) + ") n=" +
         std::to_string(spec.fusion());
}

bool adjacent(const ModelSpec& spec, int a, int b) {
  const int top = spec.max_height();
  if (a < 1 || b < 1 || a > top || b > top) return false;
  if (spec.fusion() == 1) return a - b == 1 || b - a == 1;
  const int d = b - a;
  return (d == 0 || d == 2 || d == -2) && a + b >= 4 && a + b <= 2 * spec.m_prime() - 4;
}

BandStructure band_structure(const ModelSpec& spec) {
  const int m = spec.m();
  const int mp = spec.m_prime();
  BandStructure bs;
  for (int a = 0; a <= mp; ++a) bs.h.push_back(a * (mp - m) / mp);
  for (int a = 0; a < mp; ++a) bs.delta.push_back(bs.h[a + 1] - bs.h[a]);
  for (int r = 1; r < m; ++r) {
    int rho = r * mp / m;
    bs.rho.push_back(rho);
    bs.rho0.push_back(rho % 2 == 0 ? rho : rho + 1);
    bs.rho1.push_back(rho % 2 == 1 ? rho : rho + 1);
  }
  return bs;
}

int shaded_nband_scan(const ModelSpec& spec, int n) {
  const BandStructure bs = band_structure(spec);
  int count = 0;
  // n-band starting at a covers the 1-bands a..a+n-1, all inside 1..m'-1.
  for (int a = 1; a + n <= spec.max_height(); ++a) {
    bool all = true;
    for (int i = 0; i < n; ++i) all = all && bs.shaded(a + i);
    count += all ? 1 : 0;
  }
  return count;
}

int shaded_nband_count(const ModelSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("band width must be positive");
  const int m = spec.m();
  const int mp = spec.m_prime();
  const int formula = spec.lambda_below_pi_over(n) ? n * m - (n - 1) * mp - 1 : 0;
  const int scan = shaded_nband_scan(spec, n);
  if (formula != scan) {
    throw std::logic_error("shaded band count mismatch for " + describe(spec) + ": formula " +
                           std::to_string(formula) + ", scan " + std::to_string(scan));
  }
  return formula;
}

Rational central_charge(const ModelSpec& spec) {
  const std::int64_t m = spec.m();
  const std::int64_t mp = spec.m_prime();
  return Rational(1) - Rational(6 * (mp - m) * (mp - m), m * mp);
}

Rational conformal_weight(const ModelSpec& spec, int r, int s) {
  if (r < 1 || r > spec.m() - 1 || s < 1 || s > spec.m_prime() - 1) {
    throw std::out_of_range("Kac labels (" + std::to_string(r) + "," + std::to_string(s) + ") out of range for " +
                            describe(spec));
  }
  const std::int64_t m = spec.m();
  const std::int64_t mp = spec.m_prime();
  const std::int64_t x = r * mp - s * m;
  return Rational(x * x - (m - mp) * (m - mp), 4 * m * mp);
}

Heights sector_map(const ModelSpec& spec, int r, int s) {
  if (spec.fusion() != 2 || spec.m_prime() <= 2 * spec.m()) {
    throw std::invalid_argument("sector map needs fusion 2 and m' > 2m, got " + describe(spec));
  }
  if (r < 1 || r > spec.m() - 1 || s < 1 || s > spec.m_prime() - 1) {
    throw std::out_of_range("Kac labels (" + std::to_string(r) + "," + std::to_string(s) + ") out of range for " +
                            describe(spec));
  }
  const int rho = r * spec.m_prime() / spec.m();
  const int b = (rho % 2 == s % 2) ? rho : rho + 1;
  if (b < 1 || b > spec.max_height() || !adjacent(spec, b, b)) throw std::domain_error("sector not supported");
  return {s, b, b};
}

}  // namespace rsos
