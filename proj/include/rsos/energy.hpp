#pragma once

#include "rsos/model.hpp"
#include "rsos/path.hpp"
#include "rsos/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsos {

struct Triple {
  int d, a, b;  // a is the center height
  auto operator<=>(const Triple&) const = default;
};

std::string to_string(const Triple& t);

enum class LambdaInterval { below_pi_over_n, above_pi_over_n };
std::string interval_tag(LambdaInterval i);

/// H(d, a, b) in quarter units, stored for admissible triples only.
class LocalEnergyTable {
 public:
  explicit LocalEnergyTable(ModelSpec spec);

  const ModelSpec& spec() const { return spec_; }
  LambdaInterval interval() const;

  bool admissible(int d, int a, int b) const;
  /// Throws std::out_of_range for inadmissible or unset triples.
  QExponent at(int d, int a, int b) const;
  QExponent at(const Triple& t) const { return at(t.d, t.a, t.b); }
  void set(int d, int a, int b, QExponent value);

  /// All admissible triples in lexicographic order.
  std::vector<Triple> triples() const;
  bool complete() const;

  bool operator==(const LocalEnergyTable&) const = default;

 private:
  std::size_t index(int d, int a, int b) const;

  ModelSpec spec_;
  int stride_;
  std::vector<std::optional<QExponent>> entries_;
};

/// Nonnegative-gauge tables.
LocalEnergyTable local_energy_n1(const ModelSpec& spec);
LocalEnergyTable local_energy_n2(const ModelSpec& spec);
LocalEnergyTable local_energy(const ModelSpec& spec);  // by spec.fusion()

/// Tables before the change to the nonnegative gauge.
LocalEnergyTable forrester_baxter_n1(const ModelSpec& spec);
LocalEnergyTable signed_local_energy_n2(const ModelSpec& spec);

/// Violations of nonnegativity, reflection, height reversal and the value
/// set; empty for a well-formed table.
std::vector<std::string> table_violations(const LocalEnergyTable& t);

struct GaugeFunction {
  std::map<int, Rational> G;
  Rational at(int a) const;  // missing heights read as 0
};

/// G_{a+1} - G_{a-1} = h_a, G_1 = G_2 = 0.
GaugeFunction nonnegative_gauge_n2(const ModelSpec& spec);

/// H'(a,b,c) = H(a,b,c) + 2 G_b - G_a - G_c.  Throws if a shifted entry is
/// not a multiple of 1/4, or negative when require_nonnegative is set.
LocalEnergyTable apply_gauge(const LocalEnergyTable& t, const GaugeFunction& g, bool require_nonnegative = false);

/// A gauge taking `from` to `to`, normalized to 0 at the lowest height of each
/// connected component; nullopt if none exists.
std::optional<GaugeFunction> solve_gauge(const LocalEnergyTable& from, const LocalEnergyTable& to);

struct DualityReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<Triple> mismatches;
};

/// H = n/2 - H_dual triple by triple.
DualityReport duality_check(const LocalEnergyTable& t, const LocalEnergyTable& dual);
DualityReport duality_check(const ModelSpec& spec);

QExponent path_energy(const LocalEnergyTable& t, const RsosPath& path);

}  // namespace rsos
