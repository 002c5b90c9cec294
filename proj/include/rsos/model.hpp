#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rsos {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "-22/5", "0"

/// RSOS(m, m') at fusion level n.  Validated on construction.
class ModelSpec {
 public:
  ModelSpec(int m, int m_prime, int fusion_n = 2);

  int m() const { return m_; }
  int m_prime() const { return m_prime_; }
  int fusion() const { return fusion_; }

  /// lambda / pi = (m' - m) / m'.
  Rational lambda_over_pi() const { return {m_prime_ - m_, m_prime_}; }
  /// lambda < pi / n, by cross-multiplication.
  bool lambda_below_pi_over(int n) const { return n * (m_prime_ - m_) < m_prime_; }
  /// (m' - m, m') at the same fusion level.
  ModelSpec dual() const { return ModelSpec(m_prime_ - m_, m_prime_, fusion_); }
  ModelSpec with_fusion(int n) const { return ModelSpec(m_, m_prime_, n); }

  /// Largest height; valid heights are 1..max_height().
  int max_height() const { return m_prime_ - 1; }

  bool operator==(const ModelSpec&) const = default;

 private:
  int m_;
  int m_prime_;
  int fusion_;
};

std::string describe(const ModelSpec& spec);  // "RSOS(2,5) n=2"

/// Heights a and b may sit next to each other on a path at this fusion level.
bool adjacent(const ModelSpec& spec, int a, int b);

struct BandStructure {
  std::vector<int> h;      // h[a] = floor(a(m'-m)/m'), a = 0..m'
  std::vector<int> delta;  // delta[a] = h[a+1] - h[a], a = 0..m'-1
  std::vector<int> rho;    // rho[r-1] = floor(r m'/m), r = 1..m-1
  std::vector<int> rho0;   // even members of {rho(r), rho(r)+1}, in r order
  std::vector<int> rho1;   // odd members

  int h_at(int a) const { return h.at(static_cast<std::size_t>(a)); }
  bool shaded(int a) const { return delta.at(static_cast<std::size_t>(a)) == 0; }
};

BandStructure band_structure(const ModelSpec& spec);

/// Number of shaded n-bands.  Throws std::logic_error if the closed form and
/// the scan of delta disagree.
int shaded_nband_count(const ModelSpec& spec, int n);
inline int shaded_nband_count(const ModelSpec& spec) { return shaded_nband_count(spec, spec.fusion()); }
int shaded_nband_scan(const ModelSpec& spec, int n);

Rational central_charge(const ModelSpec& spec);
Rational conformal_weight(const ModelSpec& spec, int r, int s);

struct Heights {
  int a, b, c;
  bool operator==(const Heights&) const = default;
};

/// Kac labels (r, s) to boundary heights (a, b, c).
Heights sector_map(const ModelSpec& spec, int r, int s);

}  // namespace rsos
