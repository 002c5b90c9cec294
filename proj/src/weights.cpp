#include "rsos/weights.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace rsos {

double crossing_lambda(const ModelSpec& spec) {
  return static_cast<double>(spec.m_prime() - spec.m()) * std::numbers::pi / spec.m_prime();
}

FaceWeightSet::FaceWeightSet(ModelSpec spec, double nome, std::vector<double> gauge, Evaluator eval)
    : spec_(spec), s_(crossing_lambda(spec), nome), gauge_(std::move(gauge)), eval_(std::move(eval)) {
  if (gauge_.empty()) gauge_.assign(static_cast<std::size_t>(spec_.m_prime()) + 1, 1.0);
  if (gauge_.size() != static_cast<std::size_t>(spec_.m_prime()) + 1) {
    throw std::invalid_argument("gauge needs one factor per height 0..m'");
  }
}

bool FaceWeightSet::admissible(int a, int b, int c, int d) const {
  return adjacent(spec_, a, b) && adjacent(spec_, b, c) && adjacent(spec_, c, d) && adjacent(spec_, d, a);
}

double FaceWeightSet::operator()(int a, int b, int c, int d, double u) const {
  return admissible(a, b, c, d) ? eval_(a, b, c, d, u) : 0.0;
}

FaceWeightSet weights_1x1(const ModelSpec& spec, double nome, std::vector<double> gauge) {
  const ModelSpec sp = spec.with_fusion(1);
  const SFunction s(crossing_lambda(sp), nome);
  const double lam = s.lambda();
  std::vector<double> g = gauge.empty() ? std::vector<double>(static_cast<std::size_t>(sp.m_prime()) + 1, 1.0) : gauge;
  auto eval = [s, lam, g](int a, int b, int c, int d, double u) -> double {
    if (a == c && b != d) return s(lam - u);
    if (b == d && a != c) return -(g[c] / g[a]) * s(c * lam) / s(b * lam) * s(u);
    // a == c, b == d
    const int sg = a == b + 1 ? 1 : -1;
    return s(b * lam + sg * u) / s(b * lam);
  };
  return FaceWeightSet(sp, nome, std::move(g), eval);
}

namespace {

std::vector<std::vector<std::vector<int>>> midpoints_1x1(const ModelSpec& spec1) {
  const int n = spec1.m_prime() + 1;
  std::vector<std::vector<std::vector<int>>> mids(n, std::vector<std::vector<int>>(n));
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z)
        if (adjacent(spec1, x, z) && adjacent(spec1, z, y)) mids[x][y].push_back(z);
  return mids;
}

}  // namespace

FaceWeightSet fuse_2x2(const FaceWeightSet& w, double tol) {
  if (w.spec().fusion() != 1) throw std::invalid_argument("fuse_2x2 needs a 1x1 weight set");
  const ModelSpec sp2 = w.spec().with_fusion(2);
  const auto mids = midpoints_1x1(w.spec());
  const double lam = w.lambda();
  const SFunction s = w.s();
  auto eval = [w, mids, lam, s, tol](int a, int b, int c, int d, double u) -> double {
    const double eta = s(2 * lam) * s(u) * s(u - lam);
    auto one = [&](int x21, int x12) {
      double tot = 0;
      for (int x10 : mids[a][b])
        for (int x01 : mids[a][d])
          for (int x11 : mids[x10][x01]) {
            tot += w(a, x10, x11, x01, u - lam) * w(x10, b, x21, x11, u) * w(x11, x21, c, x12, u + lam) *
                   w(x01, x11, x12, d, u);
          }
      return tot / eta;
    };
    double first = 0, lo = 0, hi = 0;
    bool seen = false;
    for (int x21 : mids[b][c])
      for (int x12 : mids[c][d]) {
        double v = one(x21, x12);
        if (!seen) first = lo = hi = v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        seen = true;
      }
    if (hi - lo > tol * (1 + std::abs(first))) {
      throw std::runtime_error("fused weight depends on the crossed heights (spread " + std::to_string(hi - lo) + ")");
    }
    return first;
  };
  return FaceWeightSet(sp2, w.nome(), w.gauge(), eval);
}

FaceWeightSet weights_2x2_closed(const ModelSpec& spec, double nome, double tol) {
  const ModelSpec sp = spec.with_fusion(2);
  const SFunction s(crossing_lambda(sp), nome);
  const double L = s.lambda();
  auto eval = [s, L, tol](int a, int b, int c, int d, double u) -> double {
    auto S = [&](int k) { return s(k * L); };
    const double s2 = s(2 * L);
    if (a == c) {
      const int A = a;
      if (b != d && b != A && d != A) return s(L - u) * s(2 * L - u) / s2;
      if ((b == A) != (d == A)) {
        const int o = b == A ? d : b;
        const int sg = o == A + 2 ? 1 : -1;
        return s(L - u) * s((A + sg) * L - sg * u) / S(A + sg);
      }
      if (b == A && d == A) {
        // two printed forms; S(A-1), S(A+1) are nonzero for admissible A
        const double v1 = s(A * L + u) * s((A + 1) * L - u) / (S(A) * S(A + 1)) +
                          S(A + 1) * S(A - 2) * s(u) * s(u - L) / (s2 * S(A) * S(A - 1));
        const double v2 = s(A * L - u) * s((A - 1) * L + u) / (S(A) * S(A - 1)) +
                          S(A - 1) * S(A + 2) * s(u) * s(u - L) / (s2 * S(A) * S(A + 1));
        if (std::abs(v1 - v2) > tol * (1 + std::abs(v1))) {
          throw std::runtime_error("the two forms of W(a,a,a,a) disagree at a=" + std::to_string(A));
        }
        return 0.5 * (v1 + v2);
      }
      // b == d != A: falls through
    }
    if (a == c && b == d) {
      const int A = b;
      const int sg = a == A + 2 ? 1 : -1;
      return s(A * L + sg * u) * s((A + sg) * L + sg * u) / (S(A) * S(A + sg));
    }
    if (b == c && c == d) {
      const int A = b;
      const int sg = a == A + 2 ? 1 : -1;
      return -S(A - sg) * s(u) * s(A * L + sg * u) / (s2 * S(A) * S(A + sg));
    }
    if (a == b && b == d) {
      const int A = a;
      const int sg = c == A + 2 ? 1 : -1;
      return -s2 * S(A + 2 * sg) * s(u) * s(A * L + sg * u) / (S(A - 1) * S(A + 1));
    }
    if (b == d) {
      const int A = b;
      const int sg = a == A + 2 ? 1 : -1;
      return S(A - 2 * sg) * S(A - sg) * s(u) * s(L + u) / (s2 * S(A) * S(A + sg));
    }
    if ((a == d && b == c) || (a == b && c == d)) {
      const int A = a;
      const int other = a == d ? b : c;
      const int sg = other == A + 2 ? 1 : -1;
      return S(A + 3 * sg) * s(u) * s(u - L) / (s2 * S(A + sg));
    }
    throw std::logic_error("unclassified fused corner configuration");
  };
  return FaceWeightSet(sp, nome, {}, eval);
}

namespace {

struct PathBasis {
  std::vector<std::vector<int>> paths;
  std::map<std::vector<int>, int> index;
};

PathBasis path_basis(const ModelSpec& spec, int L) {
  PathBasis pb;
  std::vector<int> p(static_cast<std::size_t>(L) + 1);
  std::function<void(int)> go = [&](int i) {
    if (i > L) {
      pb.index.emplace(p, static_cast<int>(pb.paths.size()));
      pb.paths.push_back(p);
      return;
    }
    for (int x = 1; x <= spec.max_height(); ++x) {
      if (i > 0 && !adjacent(spec, p[i - 1], x)) continue;
      p[i] = x;
      go(i + 1);
    }
  };
  go(0);
  return pb;
}

Eigen::MatrixXd transfer(const FaceWeightSet& w, const PathBasis& pb, int j, double u) {
  const int n = static_cast<int>(pb.paths.size());
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    const auto& p = pb.paths[col];
    std::vector<int> q = p;
    for (int y = 1; y <= w.spec().max_height(); ++y) {
      q[j] = y;
      auto it = pb.index.find(q);
      if (it != pb.index.end()) X(it->second, col) = w(p[j], p[j + 1], y, p[j - 1], u);
    }
  }
  return X;
}

}  // namespace

double ybe_residual(const FaceWeightSet& w, double u, double v) {
  const PathBasis pb = path_basis(w.spec(), 3);
  const Eigen::MatrixXd lhs = transfer(w, pb, 1, u) * transfer(w, pb, 2, u + v) * transfer(w, pb, 1, v);
  const Eigen::MatrixXd rhs = transfer(w, pb, 2, v) * transfer(w, pb, 1, u + v) * transfer(w, pb, 2, u);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

YbeScan ybe_scan(const FaceWeightSet& w, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.05, w.lambda() / 2 - 0.05);
  YbeScan out;
  for (int i = 0; i < samples; ++i) {
    const double u = dist(rng), v = dist(rng);
    out.points.emplace_back(u, v);
    out.max_residual = std::max(out.max_residual, ybe_residual(w, u, v));
  }
  out.samples = samples;
  return out;
}

double max_weight_difference(const FaceWeightSet& a, const FaceWeightSet& b, const std::vector<double>& us) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("weight sets belong to different models");
  const int top = a.spec().max_height();
  double worst = 0;
  for (int x = 1; x <= top; ++x)
    for (int y = 1; y <= top; ++y)
      for (int z = 1; z <= top; ++z)
        for (int t = 1; t <= top; ++t) {
          if (!a.admissible(x, y, z, t)) continue;
          for (double u : us) worst = std::max(worst, std::abs(a(x, y, z, t, u) - b(x, y, z, t, u)));
        }
  return worst;
}

Folding tadpole_folding(const ModelSpec& spec, int parity) {
  const int mp = spec.m_prime();
  Folding f(static_cast<std::size_t>(mp) + 1, -1);
  std::map<int, int> label_of_rep;  // smaller representative -> label
  for (int a = 1; a < mp; ++a) {
    if (parity >= 0 && a % 2 != parity) continue;
    label_of_rep.emplace(std::min(a, mp - a), 0);
  }
  int next = 0;
  for (auto& [rep, label] : label_of_rep) label = next++;
  for (int a = 1; a < mp; ++a) {
    if (parity >= 0 && a % 2 != parity) continue;
    f[a] = label_of_rep.at(std::min(a, mp - a));
  }
  return f;
}

namespace {

using LabelConfig = std::array<int, 4>;

struct FoldedWeights {
  std::map<LabelConfig, std::vector<double>> values;  // per u sample
  std::string problem;
  int labels = 0;
};

FoldedWeights fold(const FaceWeightSet& w, const Folding& f, const std::vector<double>& us, double tol) {
  FoldedWeights out;
  const int top = w.spec().max_height();
  for (int a = 1; a <= top; ++a) out.labels = std::max(out.labels, f.at(a) + 1);
  for (int a = 1; a <= top; ++a)
    for (int b = 1; b <= top; ++b)
      for (int c = 1; c <= top; ++c)
        for (int d = 1; d <= top; ++d) {
          if (f[a] < 0 || f[b] < 0 || f[c] < 0 || f[d] < 0 || !w.admissible(a, b, c, d)) continue;
          std::vector<double> vals;
          for (double u : us) vals.push_back(w(a, b, c, d, u));
          const LabelConfig key{f[a], f[b], f[c], f[d]};
          auto [it, fresh] = out.values.emplace(key, vals);
          if (fresh) continue;
          for (std::size_t i = 0; i < vals.size(); ++i) {
            if (std::abs(vals[i] - it->second[i]) > tol * (1 + std::abs(vals[i]))) {
              out.problem = "folding is not well defined: lifts of one label configuration differ";
            }
          }
        }
  return out;
}

}  // namespace

GaugeComparison compare_gauge(const FaceWeightSet& a, const Folding& fa, const FaceWeightSet& b, const Folding& fb,
                              const std::vector<double>& us, double tol) {
  GaugeComparison best;
  best.max_deviation = INFINITY;
  const FoldedWeights A = fold(a, fa, us, tol);
  const FoldedWeights B = fold(b, fb, us, tol);
  if (!A.problem.empty() || !B.problem.empty()) {
    best.reason = !A.problem.empty() ? A.problem : B.problem;
    return best;
  }
  if (A.labels != B.labels) {
    best.reason = "label sets differ in size";
    return best;
  }
  std::vector<int> perm(static_cast<std::size_t>(A.labels));
  std::iota(perm.begin(), perm.end(), 0);
  std::string last_reason;
  do {
    std::set<LabelConfig> mapped, target;
    for (const auto& [k, v] : A.values) mapped.insert({perm[k[0]], perm[k[1]], perm[k[2]], perm[k[3]]});
    for (const auto& [k, v] : B.values) target.insert(k);
    if (mapped != target) {
      last_reason = "adjacency graphs differ under every label bijection";
      if (best.bijection.empty()) best.bijection = perm;
      continue;
    }
    // ratio R(cfg, u) = W_A / W_B; the scale f(u) comes from a configuration with equal a and c labels
    std::map<LabelConfig, std::vector<double>> ratio;
    bool zero_mismatch = false;
    for (const auto& [k, va] : A.values) {
      const auto& vb = B.values.at({perm[k[0]], perm[k[1]], perm[k[2]], perm[k[3]]});
      std::vector<double> r;
      for (std::size_t i = 0; i < va.size(); ++i) {
        if (std::abs(vb[i]) < 1e-300) {
          zero_mismatch = zero_mismatch || std::abs(va[i]) > tol;
          r.push_back(1.0);
        } else {
          r.push_back(va[i] / vb[i]);
        }
      }
      ratio.emplace(k, r);
    }
    if (zero_mismatch) {
      last_reason = "a weight vanishes in one model only";
      continue;
    }
    const std::vector<double>* f = nullptr;
    for (const auto& [k, r] : ratio)
      if (k[0] == k[2]) {
        f = &r;
        break;
      }
    if (!f) {
      last_reason = "no reference configuration";
      continue;
    }
    // G(cfg) = R / f must be u-independent and equal g(c)/g(a)
    double dev = 0;
    std::map<LabelConfig, double> G;
    for (const auto& [k, r] : ratio) {
      const double g0 = r[0] / (*f)[0];
      for (std::size_t i = 1; i < r.size(); ++i) dev = std::max(dev, std::abs(r[i] / (*f)[i] - g0) / (1 + std::abs(g0)));
      G.emplace(k, g0);
    }
    std::vector<double> g(static_cast<std::size_t>(A.labels), NAN);
    g[0] = 1;
    for (int pass = 0; pass < A.labels; ++pass)
      for (const auto& [k, v] : G)
        if (k[0] != k[2]) {
          if (!std::isnan(g[k[0]]) && std::isnan(g[k[2]])) g[k[2]] = v * g[k[0]];
          if (std::isnan(g[k[0]]) && !std::isnan(g[k[2]])) g[k[0]] = g[k[2]] / v;
        }
    for (const auto& [k, v] : G) {
      const double want = k[0] == k[2] ? 1.0 : g[k[2]] / g[k[0]];
      if (std::isnan(want)) continue;
      dev = std::max(dev, std::abs(v - want) / (1 + std::abs(want)));
    }
    if (dev < best.max_deviation) {
      best.max_deviation = dev;
      best.bijection = perm;
    }
    if (dev <= tol) {
      best.equivalent = true;
      best.reason = "diagonal gauge found";
      return best;
    }
    last_reason = "gauge ratio is not of the form f(u) g(c)/g(a)";
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.reason = last_reason;
  return best;
}

}  // namespace rsos
