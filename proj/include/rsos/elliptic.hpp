#pragma once

namespace rsos {

/// theta_1(u, t) = 2 t^{1/4} sin u prod_{n>=1} (1 - 2 t^{2n} cos 2u + t^{4n})(1 - t^{2n}).
/// The product stops once t^{2n} < tol.  Throws for t outside [0, 1).
double theta1(double u, double t, double tol = 1e-17);

/// theta_1 without the 2 t^{1/4} prefactor; equals sin u at t = 0.
double theta1_reduced(double u, double t, double tol = 1e-17);

/// E(w, p) = prod_{n>=1} (1 - p^{n-1} w)(1 - p^n / w)(1 - p^n).
double elliptic_E(double w, double p, double tol = 1e-17);

/// Right side of the conjugate modulus identity for theta_1(u, e^{-eps}):
/// sqrt(pi/eps) exp(-(u - pi/2)^2 / eps) E(exp(-2 pi u / eps), exp(-2 pi^2 / eps)).
double theta1_conjugate(double u, double eps, double tol = 1e-17);

/// s(u) = theta_1(u, t) / theta_1(lambda, t).
class SFunction {
 public:
  SFunction(double lambda, double nome, double tol = 1e-17);
  double operator()(double u) const;
  double lambda() const { return lambda_; }
  double nome() const { return nome_; }

 private:
  double lambda_;
  double nome_;
  double tol_;
  double denom_;
};

}  // namespace rsos
