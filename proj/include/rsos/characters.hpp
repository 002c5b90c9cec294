#pragma once

#include "rsos/model.hpp"
#include "rsos/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsos {

struct Sector {
  int r, s;
  int a, b, c;
  int mu;  // s mod 2
};

Sector sector(const ModelSpec& spec, int r, int s);
/// Every Kac pair, r-major.
std::vector<Sector> all_sectors(const ModelSpec& spec);

QSeries bosonic_finitized(const ModelSpec& spec, int r, int s, int N);

struct SectorCheck {
  int r = 0, s = 0, N = 0;
  bool pass = false;
  std::optional<QExponent> gamma_lattice;  // empty when the side is zero
  std::optional<QExponent> gamma_bosonic;
  QSeries lattice;  // normalized
  QSeries bosonic;  // normalized
};

struct BosonicReport {
  ModelSpec spec;
  bool pass = true;
  std::vector<SectorCheck> checks;  // by N, then sector
};

/// normalize(X) against normalize(bosonic) for every sector and 0 <= N <= N_max.
BosonicReport verify_bosonic(const ModelSpec& spec, int N_max);

struct KacCheck {
  int r, s, N;
  bool heights_reflected;
  bool series_equal;
};

struct KacReport {
  bool pass = true;
  std::vector<KacCheck> checks;
  int self_conjugate_skipped = 0;
};

/// bosonic at (r, s) against (m - r, m' - s) for 0 <= N' <= N.
KacReport kac_symmetry_check(const ModelSpec& spec, int N);

/// Character without the q^{-c/24 + Delta} prefactor, known through q^K.
QSeries virasoro_character(const ModelSpec& spec, int r, int s, int K);

struct StabilizationPoint {
  int N;
  int K;  // largest order through which normalize(bosonic) matches the character; -1 if none
  bool bounded_by_character;  // every coefficient <= the character coefficient
};

struct StabilizationReport {
  bool non_decreasing = true;
  bool bounded = true;
  bool pass = false;
  std::vector<StabilizationPoint> points;
};

StabilizationReport stabilization_check(const ModelSpec& spec, int r, int s, const std::vector<int>& Ns);

/// Boundary heights (a, b) of the logarithmic sector (r, s) of LM(p, p').
std::pair<int, int> log_sector_heights(int p, int p_prime, int r, int s);
QSeries log_finitized(int p, int p_prime, int r, int s, int N);
/// (1 - q^{rs}) / (q)_infinity through q^K.
QSeries kac_character(int r, int s, int K);

struct LogApproxPoint {
  int m, m_prime;
  bool heights_match;  // sector_map(r, s) gives the limiting (a, b)
  bool equal;          // bosonic_finitized == log_finitized
};

struct LogLimitReport {
  int p, p_prime, r, s, N, K;
  std::vector<LogApproxPoint> sequence;  // (p t, p' t + 1) for coprime t = 1, 2, ...
  bool stabilized = false;               // the last three members agree exactly
  bool kac_pass = false;                 // N -> infinity matches (1 - q^{rs})/(q)_infinity through q^K
  std::optional<QExponent> kac_first_difference;
};

/// Finite-N limit along (p t, p' t + 1) and the large-N comparison with the
/// Kac character, which uses N = K + (b + a)/2.
LogLimitReport log_limit_check(int p, int p_prime, int r, int s, int N, int K);

struct GridEntry {
  int m, m_prime, N_max;
};

/// The (m, m', N) grid on which the bosonic forms are checked.
const std::vector<GridEntry>& conjecture_grid();

}  // namespace rsos
