#include "rsos/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rsos {

namespace {

void check_nome(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("elliptic nome must lie in [0, 1), got " + std::to_string(t));
}

}  // namespace

double theta1_reduced(double u, double t, double tol) {
  check_nome(t);
  double p = std::sin(u);
  if (t == 0.0) return p;
  const double c2 = std::cos(2 * u);
  const double t2 = t * t;
  double t2n = t2;
  while (true) {
    p *= (1 - 2 * t2n * c2 + t2n * t2n) * (1 - t2n);
    if (t2n < tol) break;
    t2n *= t2;
  }
  return p;
}

double theta1(double u, double t, double tol) {
  check_nome(t);
  return 2 * std::pow(t, 0.25) * theta1_reduced(u, t, tol);
}

double elliptic_E(double w, double p, double tol) {
  if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("elliptic_E needs 0 <= p < 1");
  double out = 1 - w;
  for (double pn = p; pn > 0 && (pn >= tol || pn / std::abs(w) >= tol); pn *= p) {
    out *= (1 - pn * w) * (1 - pn / w) * (1 - pn);
  }
  return out;
}

double theta1_conjugate(double u, double eps, double tol) {
  if (!(eps > 0)) throw std::domain_error("conjugate modulus needs eps > 0");
  const double pi = std::numbers::pi;
  const double w = std::exp(-2 * pi * u / eps);
  const double p = std::exp(-2 * pi * pi / eps);
  return std::sqrt(pi / eps) * std::exp(-(u - pi / 2) * (u - pi / 2) / eps) * elliptic_E(w, p, tol);
}

SFunction::SFunction(double lambda, double nome, double tol)
    : lambda_(lambda), nome_(nome), tol_(tol), denom_(theta1_reduced(lambda, nome, tol)) {
  if (denom_ == 0.0) throw std::domain_error("theta_1(lambda) vanishes");
}

double SFunction::operator()(double u) const { return theta1_reduced(u, nome_, tol_) / denom_; }

}  // namespace rsos
