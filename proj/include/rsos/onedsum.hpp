#pragma once

#include "rsos/energy.hpp"
#include "rsos/model.hpp"
#include "rsos/qseries.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rsos {

/// Sum of q^E over all paths with boundary (a, b, c), by enumeration.
QSeries brute_force_X(const ModelSpec& spec, int a, int b, int c, int N);

/// Bottom-up CTM recursion holding X^{(N)}_{abc} for every (a, b, c) at the
/// current level N.
class OneDimSums {
 public:
  explicit OneDimSums(LocalEnergyTable table);

  const ModelSpec& spec() const { return table_.spec(); }
  int level() const { return level_; }
  void advance();
  void advance_to(int N);

  /// Zero outside 1..m'-1 and for non-adjacent (b, c).
  const QSeries& X(int a, int b, int c) const;

 private:
  std::size_t index(int a, int b, int c) const;

  LocalEnergyTable table_;
  int stride_;
  int level_ = 0;
  std::vector<QSeries> values_;
};

struct SumTable {
  ModelSpec spec;
  int N;
  int c;
  std::map<std::pair<int, int>, QSeries> values;  // (a, b) with b adjacent to c

  /// Zero for heights outside the table.
  QSeries at(int a, int b) const;
};

SumTable recursive_X(const ModelSpec& spec, int c, int N);

/// normalize(X) at sector_map(r, s).
std::pair<QSeries, QExponent> normalized_sum(const ModelSpec& spec, int r, int s, int N);

}  // namespace rsos
