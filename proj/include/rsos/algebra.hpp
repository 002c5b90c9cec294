#pragma once

#include "rsos/model.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace rsos {

struct AlgebraConstants {
  double lambda;
  double beta;   // 2 cos lambda
  double beta2;  // sin 3 lambda / sin lambda
  double beta3;  // sin 4 lambda / sin lambda

  static AlgebraConstants from_lambda(double lambda);
};

/// Matrices of the fused Temperley-Lieb generators acting on fused paths
/// a_0..a_L.  Index j = 1..L-1 (slot 0 unused).
struct OperatorRep {
  ModelSpec spec;
  int L;
  AlgebraConstants k;
  std::vector<std::vector<int>> basis;
  Eigen::MatrixXd I;
  std::vector<Eigen::MatrixXd> E;
  std::vector<Eigen::MatrixXd> Y;   // beta Xi
  std::vector<Eigen::MatrixXd> Xi;
  std::vector<Eigen::MatrixXd> X;   // Xi + E / beta

  /// s(lambda-u)s(2lambda-u)/s(2lambda) I + s(u)s(lambda-u) X_j + s(u)s(u+lambda)/s(2lambda) E_j
  Eigen::MatrixXd face(int j, double u) const;
  /// The same operator written with Xi_j: ... + s(u)s(lambda-u) Xi_j + s(2u)/s(2lambda) E_j
  Eigen::MatrixXd face_xi(int j, double u) const;
};

/// S_a = sin(a lambda) / sin(lambda).
double S_normalized(const ModelSpec& spec, int a);

/// Triangle vector components for center a and neighbour b (b in {a+2, a, a-2})
/// or, for y/y~, midpoint h and neighbour b in {h+1, h-1}.
double tri_e(const ModelSpec& spec, int a, int b);
double tri_e_tilde(const ModelSpec& spec, int a, int c);
double tri_x(const ModelSpec& spec, int a, int b);
double tri_x_tilde(const ModelSpec& spec, int a, int c);
double tri_y_tilde(const ModelSpec& spec, int h, int c);

/// Basis restricted to a_0 = a0 when given.
OperatorRep build_operator_rep(const ModelSpec& spec, int L, std::optional<int> a0 = std::nullopt);

struct RelationResult {
  std::string name;
  double residual;
  bool pass;
  bool diagnostic;  // reported but not part of the verdict
};

struct AlgebraReport {
  bool pass = true;
  std::vector<RelationResult> relations;
};

/// Loop contractions e~.e = beta2, x~.x = y~.y = beta3/beta, e~.x = x~.e = 0,
/// checked at every admissible center.
AlgebraReport check_loop_contractions(const ModelSpec& spec, double tol = 1e-12);

/// Every listed relation as a matrix identity.  `k` overrides the constants
/// used on the right-hand sides.
AlgebraReport check_algebra(const OperatorRep& rep, double tol = 1e-10, std::optional<AlgebraConstants> k = std::nullopt,
                            unsigned seed = 7);

/// Merge reports (max residual per relation name).
void merge_into(AlgebraReport& total, const AlgebraReport& part);

}  // namespace rsos
