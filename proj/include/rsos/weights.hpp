#pragma once

#include "rsos/elliptic.hpp"
#include "rsos/model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rsos {

/// Face weights W(a, b, c, d | u), corners read anticlockwise from the
/// bottom; a and c are the pair updated by a transfer operator.
class FaceWeightSet {
 public:
  using Evaluator = std::function<double(int, int, int, int, double)>;

  /// Adjacency follows spec.fusion().  The evaluator is only called on
  /// admissible corners.
  FaceWeightSet(ModelSpec spec, double nome, std::vector<double> gauge, Evaluator eval);

  const ModelSpec& spec() const { return spec_; }
  double nome() const { return s_.nome(); }
  double lambda() const { return s_.lambda(); }
  const SFunction& s() const { return s_; }
  const std::vector<double>& gauge() const { return gauge_; }

  bool admissible(int a, int b, int c, int d) const;
  double operator()(int a, int b, int c, int d, double u) const;

 private:
  ModelSpec spec_;
  SFunction s_;
  std::vector<double> gauge_;
  Evaluator eval_;
};

double crossing_lambda(const ModelSpec& spec);  // (m' - m) pi / m'

/// Gauge factors g_a indexed by height 0..m'; empty means all ones.
FaceWeightSet weights_1x1(const ModelSpec& spec, double nome, std::vector<double> gauge = {});

/// 2x2 fusion of a 1x1 set.  Each evaluation sums over the internal heights
/// and checks independence of the two crossed heights; throws
/// std::runtime_error if the spread exceeds tol (relative to 1 + |W|).
FaceWeightSet fuse_2x2(const FaceWeightSet& w, double tol = 1e-10);

/// Closed forms of the 19 fused weights.  The two expressions for
/// W(a,a,a,a) must agree to tol, else std::runtime_error.
FaceWeightSet weights_2x2_closed(const ModelSpec& spec, double nome, double tol = 1e-10);

/// max |X_1(u) X_2(u+v) X_1(v) - X_2(v) X_1(u+v) X_2(u)| over paths a_0..a_3,
/// with <s'|X_j(u)|s> = W(s_j, s_{j+1}, s'_j, s_{j-1} | u).
double ybe_residual(const FaceWeightSet& w, double u, double v);

struct YbeScan {
  double max_residual = 0;
  int samples = 0;
  std::vector<std::pair<double, double>> points;
};

/// ybe_residual at `samples` random (u, v) with u, v in (0.05, lambda/2 - 0.05),
/// which keeps u, v and u + v away from the zeros of s(u) s(u - lambda).
YbeScan ybe_scan(const FaceWeightSet& w, int samples, unsigned seed = 1);

/// Largest |A - B| over admissible corners and the given u samples.
double max_weight_difference(const FaceWeightSet& a, const FaceWeightSet& b, const std::vector<double>& us);

/// Height-to-label map for folding a model; -1 drops a height.
using Folding = std::vector<int>;

struct GaugeComparison {
  bool equivalent = false;
  std::string reason;
  std::vector<int> bijection;  // label of A -> label of B for the best attempt
  double max_deviation = 0;    // spread of the gauge ratio over u for the best attempt
};

/// Tries every bijection between the label sets of the folded models and
/// decides whether W_A = f(u) g(c)/g(a) W_B for some scalar f and labels gauge g.
GaugeComparison compare_gauge(const FaceWeightSet& a, const Folding& fa, const FaceWeightSet& b, const Folding& fb,
                              const std::vector<double>& us, double tol = 1e-9);

/// Folding by a -> m' - a onto tadpole labels, keeping heights of one parity
/// when parity >= 0.  Labels are 0, 1, ... in order of the smaller representative.
Folding tadpole_folding(const ModelSpec& spec, int parity = -1);

}  // namespace rsos
