#include "rsos/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace rsos {

namespace {

void check_boundary(const ModelSpec& spec, int a, int b, int c, int N) {
  const int top = spec.max_height();
  if (N < 0) throw std::invalid_argument("path length must be >= 0");
  for (int x : {a, b, c}) {
    if (x < 1 || x > top) throw std::invalid_argument("height " + std::to_string(x) + " outside 1.." + std::to_string(top));
  }
  if (!adjacent(spec, b, c)) {
    throw std::invalid_argument("boundary heights b=" + std::to_string(b) + ", c=" + std::to_string(c) +
                                " are not adjacent in " + describe(spec));
  }
}

std::vector<std::vector<int>> neighbour_lists(const ModelSpec& spec) {
  std::vector<std::vector<int>> nb(spec.m_prime() + 1);
  for (int x = 1; x <= spec.max_height(); ++x)
    for (int y = 1; y <= spec.max_height(); ++y)
      if (adjacent(spec, x, y)) nb[x].push_back(y);
  return nb;
}

}  // namespace

void for_each_path(const ModelSpec& spec, int a, int b, int c, int N,
                   const std::function<void(const std::vector<int>&)>& visit) {
  check_boundary(spec, a, b, c, N);
  const auto nb = neighbour_lists(spec);
  const int reach = spec.fusion();  // max |step| is 2 at n=2, counted in units of 1 per step at n=1
  std::vector<int> path(static_cast<std::size_t>(N) + 2);
  path[0] = a;
  path[N + 1] = c;
  auto can_reach = [&](int x, int steps) { return std::abs(x - b) <= reach * steps; };
  std::function<void(int)> go = [&](int j) {
    if (j == N) {
      if (path[N] == b) visit(path);
      return;
    }
    for (int y : nb[path[j]]) {
      if (!can_reach(y, N - j - 1)) continue;
      path[j + 1] = y;
      go(j + 1);
    }
  };
  if (can_reach(a, N)) go(0);
}

std::vector<RsosPath> enumerate_paths(const ModelSpec& spec, int a, int b, int c, int N) {
  std::vector<RsosPath> out;
  for_each_path(spec, a, b, c, N, [&](const std::vector<int>& p) { out.emplace_back(spec, p); });
  return out;
}

std::uint64_t count_paths(const ModelSpec& spec, int a, int b, int c, int N) {
  std::uint64_t n = 0;
  for_each_path(spec, a, b, c, N, [&](const std::vector<int>&) { ++n; });
  return n;
}

std::vector<int> ground_state_heights(const ModelSpec& spec) {
  if (spec.fusion() != 2 || spec.m_prime() <= 2 * spec.m()) {
    throw std::invalid_argument("ground states need fusion 2 and m' > 2m, got " + describe(spec));
  }
  const BandStructure bs = band_structure(spec);
  std::vector<int> out = bs.rho0;
  out.insert(out.end(), bs.rho1.begin(), bs.rho1.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RsosPath> ground_states(const ModelSpec& spec, int N) {
  std::vector<RsosPath> out;
  for (int x : ground_state_heights(spec)) out.emplace_back(spec, std::vector<int>(static_cast<std::size_t>(N) + 2, x));
  return out;
}

std::string JmPath::violation(int k, const std::vector<int>& d) {
  if (k < 1) return "k must be >= 1";
  if (d.size() < 2 || d.size() % 2 != 0) return "doubled path must have 2N+2 entries";
  const int lo = 2, hi = 2 * k + 2;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < lo || d[i] > hi) return "height out of range at index " + std::to_string(i);
    if (i > 0 && std::abs(d[i] - d[i - 1]) != 1) return "half-step must change height by 1/2 at index " + std::to_string(i);
  }
  if (d[0] % 2 != 0) return "sigma_0 must be an integer";
  const std::size_t last = d.size() - 1;
  if (d[last] != d[last - 1] - 1) return "final half-step must be down";
  for (std::size_t i = 1; i + 1 < d.size(); i += 2) {
    if (d[i] > d[i - 1] && d[i] > d[i + 1]) return "peak at half-integer time " + std::to_string(i) + "/2";
  }
  return {};
}

JmPath::JmPath(int k, std::vector<int> doubled) : k_(k), doubled_(std::move(doubled)) {
  std::string why = violation(k_, doubled_);
  if (!why.empty()) throw std::invalid_argument("invalid JM path: " + why);
}

std::string to_string(const JmPath& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.doubled().size(); ++i) {
    if (i) out += ",";
    int v = p.doubled()[i];
    out += v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2";
  }
  return out + ")";
}

ModelSpec jm_model(int k) { return ModelSpec(k + 1, 2 * k + 3, 2); }

RsosPath jm_to_rsos(const JmPath& p) {
  std::vector<int> h;
  for (std::size_t i = 0; i + 1 < p.doubled().size(); i += 2) h.push_back(p.doubled()[i] - 1);
  h.push_back(h.back());
  return RsosPath(jm_model(p.k()), std::move(h));
}

JmPath rsos_to_jm(const RsosPath& p) {
  const ModelSpec& spec = p.spec();
  if (spec.fusion() != 2 || spec.m_prime() != 2 * spec.m() + 1) {
    throw std::invalid_argument("JM correspondence needs fusion 2 and m' = 2m+1, got " + describe(spec));
  }
  if (p[0] % 2 == 0) throw std::invalid_argument("JM correspondence covers the odd sector only");
  const int N = p.length();
  if (p[N] != p[N + 1]) throw std::invalid_argument("JM correspondence needs sigma_N = sigma_{N+1}");
  std::vector<int> d;
  for (int j = 0; j < N; ++j) {
    int x = p[j] + 1, y = p[j + 1] + 1;
    d.push_back(x);
    d.push_back(x == y ? x - 1 : (x + y) / 2);
  }
  d.push_back(p[N] + 1);
  d.push_back(p[N]);
  return JmPath(spec.m() - 1, std::move(d));
}

QExponent jm_energy(const JmPath& p) {
  const auto& d = p.doubled();
  // At doubled time i, j = i/2 and w = |d[i+1] - d[i-1]| / 4, so 8E = sum i |d[i+1] - d[i-1]|.
  std::int64_t eight_e = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i) eight_e += static_cast<std::int64_t>(i) * std::abs(d[i + 1] - d[i - 1]);
  return QExponent(eight_e / 2);
}

std::vector<JmPath> enumerate_jm_paths(int k, int N) {
  std::vector<JmPath> out;
  const std::size_t len = 2 * static_cast<std::size_t>(N) + 2;
  std::vector<int> d(len);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == len) {
      if (JmPath::violation(k, d).empty()) out.emplace_back(k, d);
      return;
    }
    for (int step : {-1, 1}) {
      int v = d[i - 1] + step;
      if (v < 2 || v > 2 * k + 2) continue;
      // a half-integer time i-1 may not be a peak
      if (i >= 2 && (i - 1) % 2 == 1 && d[i - 1] > d[i - 2] && d[i - 1] > v) continue;
      d[i] = v;
      go(i + 1);
    }
  };
  for (int s = 2; s <= 2 * k + 2; s += 2) {
    d[0] = s;
    go(1);
  }
  return out;
}

JmReport jm_check(int k, int N) {
  JmReport rep;
  rep.k = k;
  rep.N = N;
  const ModelSpec spec = jm_model(k);
  const LocalEnergyTable table = local_energy(spec);

  std::set<std::vector<int>> rsos_set;
  for (int a = 1; a <= spec.max_height(); a += 2) {
    for (int b = 1; b <= spec.max_height(); b += 2) {
      if (!adjacent(spec, b, b)) continue;
      for_each_path(spec, a, b, b, N, [&](const std::vector<int>& h) { rsos_set.insert(h); });
    }
  }
  rep.rsos_count = rsos_set.size();

  const auto jms = enumerate_jm_paths(k, N);
  rep.jm_count = jms.size();
  rep.round_trips = true;
  std::set<std::vector<int>> images;
  for (const auto& p : jms) {
    const RsosPath r = jm_to_rsos(p);
    images.insert(r.heights());
    if (!(rsos_to_jm(r) == p)) rep.round_trips = false;
  }
  for (const auto& h : rsos_set) {
    const RsosPath r(spec, h);
    if (!(jm_to_rsos(rsos_to_jm(r)) == r)) rep.round_trips = false;
  }
  rep.bijection = rep.round_trips && rep.jm_count == rep.rsos_count && images == rsos_set;

  // Differences in eighths so that E_RSOS / 2 stays integral.
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::string>> seen;
  rep.half_energy_constant = true;
  rep.boundary_relation = true;
  for (const auto& p : jms) {
    const RsosPath r = jm_to_rsos(p);
    const QExponent e_jm = jm_energy(p);
    const QExponent e_rsos = path_energy(table, r);
    const auto& d = p.doubled();
    const int d0 = d.front(), dN = d[2 * static_cast<std::size_t>(N)];
    const std::int64_t diff8 = 2 * e_jm.quarters - e_rsos.quarters;
    const std::string where = to_string(p) + " -> " + to_string(r);
    auto [it, fresh] = seen.try_emplace({d0, dN}, diff8, where);
    if (!fresh && it->second.first != diff8 && rep.half_energy_constant) {
      rep.half_energy_constant = false;
      rep.half_energy_counterexample = it->second.second + " gives " + to_string(Rational(it->second.first, 8)) +
                                       ", " + where + " gives " + to_string(Rational(diff8, 8)) +
                                       " (E_JM - E_RSOS/2 in units of q)";
    }
    if (e_jm - e_rsos != QExponent((d0 - dN) / 2) && rep.boundary_relation) {
      rep.boundary_relation = false;
      rep.boundary_counterexample = where + ": E_JM = " + to_string(e_jm) + ", E_RSOS = " + to_string(e_rsos);
    }
  }
  return rep;
}

}  // namespace rsos
