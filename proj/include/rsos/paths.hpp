#pragma once

#include "rsos/energy.hpp"
#include "rsos/model.hpp"
#include "rsos/path.hpp"
#include "rsos/qseries.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rsos {

/// Visits every admissible path with sigma_0 = a, sigma_N = b, sigma_{N+1} = c
/// in lexicographic order.  The visitor sees sigma_0..sigma_{N+1}.
void for_each_path(const ModelSpec& spec, int a, int b, int c, int N,
                   const std::function<void(const std::vector<int>&)>& visit);
std::vector<RsosPath> enumerate_paths(const ModelSpec& spec, int a, int b, int c, int N);
std::uint64_t count_paths(const ModelSpec& spec, int a, int b, int c, int N);

/// Heights of the flat zero-energy paths: rho0 and rho1 merged, ascending.
std::vector<int> ground_state_heights(const ModelSpec& spec);
/// Flat paths of length N at the ground state heights.
std::vector<RsosPath> ground_states(const ModelSpec& spec, int N = 1);

/// Half-integer path of Jacob-Mathieu type stored on a doubled grid:
/// doubled()[i] = 2 sigma_{i/2}, i = 0 .. 2N+1.
class JmPath {
 public:
  JmPath(int k, std::vector<int> doubled);  // throws if the JM constraints fail

  /// Empty when valid, else the first violated constraint.
  static std::string violation(int k, const std::vector<int>& doubled);

  int k() const { return k_; }
  int length() const { return static_cast<int>(doubled_.size() - 1) / 2; }  // N
  const std::vector<int>& doubled() const { return doubled_; }

  bool operator==(const JmPath&) const = default;

 private:
  int k_;
  std::vector<int> doubled_;
};

std::string to_string(const JmPath& p);  // "(2,3/2,1,...)"

/// RSOS(k+1, 2k+3) at fusion 2.
ModelSpec jm_model(int k);

RsosPath jm_to_rsos(const JmPath& p);
JmPath rsos_to_jm(const RsosPath& p);
/// Sum over half-integer j in [1/2, N] of j w(j), w(j) = |sigma_{j+1/2} - sigma_{j-1/2}| / 2.
QExponent jm_energy(const JmPath& p);

/// All JM paths of length N, built directly from the half-step rules.
std::vector<JmPath> enumerate_jm_paths(int k, int N);

struct JmReport {
  int k = 0, N = 0;
  std::size_t jm_count = 0;
  std::size_t rsos_count = 0;  // odd sector, sigma_N = sigma_{N+1}
  bool round_trips = false;    // both directions, every path
  bool bijection = false;
  /// jm_energy - E_RSOS / 2 is constant for fixed (sigma~_0, sigma~_N).
  bool half_energy_constant = false;
  std::string half_energy_counterexample;
  /// jm_energy - E_RSOS = (sigma~_0 - sigma~_N) / 4 for every path.
  bool boundary_relation = false;
  std::string boundary_counterexample;
};

JmReport jm_check(int k, int N);

}  // namespace rsos
