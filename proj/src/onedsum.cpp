#include "rsos/onedsum.hpp"

#include "rsos/paths.hpp"

#include <stdexcept>

namespace rsos {

QSeries brute_force_X(const ModelSpec& spec, int a, int b, int c, int N) {
  const LocalEnergyTable table = local_energy(spec);
  QSeries::Terms counts;
  for_each_path(spec, a, b, c, N, [&](const std::vector<int>& p) {
    QExponent e;
    for (int j = 1; j <= N; ++j) e += table.at(p[j - 1], p[j], p[j + 1]) * j;
    counts[e] += 1;
  });
  return QSeries(std::move(counts));
}

OneDimSums::OneDimSums(LocalEnergyTable table)
    : table_(std::move(table)),
      stride_(table_.spec().m_prime() + 1),
      values_(static_cast<std::size_t>(stride_) * stride_ * stride_) {
  const ModelSpec& s = table_.spec();
  for (int a = 1; a <= s.max_height(); ++a)
    for (int c = 1; c <= s.max_height(); ++c)
      if (adjacent(s, a, c)) values_[index(a, a, c)] = QSeries::one();
}

std::size_t OneDimSums::index(int a, int b, int c) const {
  return (static_cast<std::size_t>(a) * stride_ + b) * stride_ + c;
}

const QSeries& OneDimSums::X(int a, int b, int c) const {
  static const QSeries zero;
  const int top = table_.spec().max_height();
  if (a < 1 || b < 1 || c < 1 || a > top || b > top || c > top) return zero;
  return values_[index(a, b, c)];
}

void OneDimSums::advance() {
  const ModelSpec& s = table_.spec();
  const int top = s.max_height();
  const int N = level_ + 1;
  std::vector<QSeries> next(values_.size());
  for (int b = 1; b <= top; ++b) {
    for (int c = 1; c <= top; ++c) {
      if (!adjacent(s, b, c)) continue;
      for (int d = 1; d <= top; ++d) {
        if (!adjacent(s, d, b)) continue;
        const QExponent shift = table_.at(d, b, c) * N;
        for (int a = 1; a <= top; ++a) {
          const QSeries& prev = values_[index(a, d, b)];
          if (!prev.is_zero()) next[index(a, b, c)] += prev.shifted(shift);
        }
      }
    }
  }
  values_ = std::move(next);
  level_ = N;
}

void OneDimSums::advance_to(int N) {
  if (N < level_) throw std::invalid_argument("recursion cannot go back to a lower level");
  while (level_ < N) advance();
}

QSeries SumTable::at(int a, int b) const {
  auto it = values.find({a, b});
  return it == values.end() ? QSeries() : it->second;
}

SumTable recursive_X(const ModelSpec& spec, int c, int N) {
  if (c < 1 || c > spec.max_height()) throw std::invalid_argument("boundary height c out of range");
  OneDimSums sums(local_energy(spec));
  sums.advance_to(N);
  SumTable t{spec, N, c, {}};
  for (int a = 1; a <= spec.max_height(); ++a)
    for (int b = 1; b <= spec.max_height(); ++b)
      if (adjacent(spec, b, c)) t.values.emplace(std::pair{a, b}, sums.X(a, b, c));
  return t;
}

std::pair<QSeries, QExponent> normalized_sum(const ModelSpec& spec, int r, int s, int N) {
  const Heights h = sector_map(spec, r, s);
  return normalize(recursive_X(spec, h.c, N).at(h.a, h.b));
}

}  // namespace rsos
