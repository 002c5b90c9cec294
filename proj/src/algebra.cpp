#include "rsos/algebra.hpp"

#include "rsos/weights.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace rsos {

AlgebraConstants AlgebraConstants::from_lambda(double lambda) {
  const double sl = std::sin(lambda);
  return {lambda, 2 * std::cos(lambda), std::sin(3 * lambda) / sl, std::sin(4 * lambda) / sl};
}

double S_normalized(const ModelSpec& spec, int a) {
  const double lam = crossing_lambda(spec);
  return std::sin(a * lam) / std::sin(lam);
}

double tri_e(const ModelSpec& spec, int a, int b) {
  auto S = [&](int k) { return S_normalized(spec, k); };
  if (b == a + 2) return 1 / S(a + 1);
  if (b == a) return S(a) / (S(a - 1) * S(a + 1));
  if (b == a - 2) return 1 / S(a - 1);
  throw std::invalid_argument("triangle component needs b in {a-2, a, a+2}");
}

double tri_e_tilde(const ModelSpec& spec, int a, int c) {
  auto S = [&](int k) { return S_normalized(spec, k); };
  if (c == a + 2) return S(a + 1) * S(a + 2) / S(a);
  if (c == a) return S(a - 1) * S(a + 1) / S(a);
  if (c == a - 2) return S(a - 2) * S(a - 1) / S(a);
  throw std::invalid_argument("triangle component needs c in {a-2, a, a+2}");
}

double tri_x(const ModelSpec& spec, int a, int b) {
  auto S = [&](int k) { return S_normalized(spec, k); };
  if (b == a + 2) return -S(a - 1) / S(a + 1);
  if (b == a) return S(2 * a) / (S(a - 1) * S(a + 1));
  if (b == a - 2) return S(a + 1) / S(a - 1);
  throw std::invalid_argument("triangle component needs b in {a-2, a, a+2}");
}

double tri_x_tilde(const ModelSpec& spec, int a, int c) {
  auto S = [&](int k) { return S_normalized(spec, k); };
  if (c == a + 2) return -S(a + 2) / S(a);
  if (c == a) return S(2 * a) / (S(a) * S(a));
  if (c == a - 2) return S(a - 2) / S(a);
  throw std::invalid_argument("triangle component needs c in {a-2, a, a+2}");
}

double tri_y_tilde(const ModelSpec& spec, int h, int c) {
  auto S = [&](int k) { return S_normalized(spec, k); };
  if (c == h + 1) return S(h + 2) / S(h);
  if (c == h - 1) return S(h - 2) / S(h);
  throw std::invalid_argument("triangle component needs c in {h-1, h+1}");
}

namespace {

double s_crit(const AlgebraConstants& k, double u) { return std::sin(u) / std::sin(k.lambda); }

}  // namespace

Eigen::MatrixXd OperatorRep::face(int j, double u) const {
  const double l = k.lambda;
  return s_crit(k, l - u) * s_crit(k, 2 * l - u) / s_crit(k, 2 * l) * I + s_crit(k, u) * s_crit(k, l - u) * X[j] +
         s_crit(k, u) * s_crit(k, u + l) / s_crit(k, 2 * l) * E[j];
}

Eigen::MatrixXd OperatorRep::face_xi(int j, double u) const {
  const double l = k.lambda;
  return s_crit(k, l - u) * s_crit(k, 2 * l - u) / s_crit(k, 2 * l) * I + s_crit(k, u) * s_crit(k, l - u) * Xi[j] +
         s_crit(k, 2 * u) / s_crit(k, 2 * l) * E[j];
}

OperatorRep build_operator_rep(const ModelSpec& spec_in, int L, std::optional<int> a0) {
  if (L < 3) throw std::invalid_argument("operator representation needs L >= 3");
  const ModelSpec spec = spec_in.with_fusion(2);
  OperatorRep rep{spec, L, AlgebraConstants::from_lambda(crossing_lambda(spec)), {}, {}, {}, {}, {}, {}};
  std::vector<int> p(static_cast<std::size_t>(L) + 1);
  std::function<void(int)> go = [&](int i) {
    if (i > L) {
      rep.basis.push_back(p);
      return;
    }
    for (int x = 1; x <= spec.max_height(); ++x) {
      if (i == 0 && a0 && x != *a0) continue;
      if (i > 0 && !adjacent(spec, p[i - 1], x)) continue;
      p[i] = x;
      go(i + 1);
    }
  };
  go(0);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < rep.basis.size(); ++i) index.emplace(rep.basis[i], static_cast<int>(i));
  const int n = static_cast<int>(rep.basis.size());
  rep.I = Eigen::MatrixXd::Identity(n, n);
  rep.E.assign(static_cast<std::size_t>(L), Eigen::MatrixXd::Zero(n, n));
  rep.Y.assign(static_cast<std::size_t>(L), Eigen::MatrixXd::Zero(n, n));
  for (int j = 1; j < L; ++j) {
    for (int col = 0; col < n; ++col) {
      const auto& old = rep.basis[col];
      const int l = old[j - 1], r = old[j + 1], c = old[j];
      std::vector<int> q = old;
      for (int y = 1; y <= spec.max_height(); ++y) {
        q[j] = y;
        auto it = index.find(q);
        if (it == index.end()) continue;
        const int row = it->second;
        if (l == r) {
          rep.E[j](row, col) = tri_e(spec, l, y) * tri_e_tilde(spec, l, c);
          rep.Y[j](row, col) = tri_x(spec, l, y) * tri_x_tilde(spec, l, c);
        } else if (std::abs(l - r) == 2) {
          rep.Y[j](row, col) = tri_y_tilde(spec, (l + r) / 2, c);
        }
      }
    }
  }
  rep.Xi.resize(static_cast<std::size_t>(L));
  rep.X.resize(static_cast<std::size_t>(L));
  for (int j = 1; j < L; ++j) {
    rep.Xi[j] = rep.Y[j] / rep.k.beta;
    rep.X[j] = rep.Xi[j] + rep.E[j] / rep.k.beta;
  }
  return rep;
}

namespace {

class Collector {
 public:
  Collector(AlgebraReport& rep, double tol) : rep_(rep), tol_(tol) {}

  void add(const std::string& name, double residual, bool diagnostic = false) {
    for (auto& r : rep_.relations) {
      if (r.name == name) {
        r.residual = std::max(r.residual, residual);
        r.pass = r.residual <= tol_;
        return;
      }
    }
    rep_.relations.push_back({name, residual, residual <= tol_, diagnostic});
  }
  void add(const std::string& name, const Eigen::MatrixXd& diff, bool diagnostic = false) {
    add(name, diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0, diagnostic);
  }
  void finish() {
    rep_.pass = true;
    for (const auto& r : rep_.relations)
      if (!r.diagnostic) rep_.pass = rep_.pass && r.pass;
  }

 private:
  AlgebraReport& rep_;
  double tol_;
};

}  // namespace

AlgebraReport check_loop_contractions(const ModelSpec& spec_in, double tol) {
  const ModelSpec spec = spec_in.with_fusion(2);
  const AlgebraConstants k = AlgebraConstants::from_lambda(crossing_lambda(spec));
  AlgebraReport rep;
  Collector out(rep, tol);
  for (int a = 1; a <= spec.max_height(); ++a) {
    double ee = 0, xx = 0, ex = 0, xe = 0, enorm = 0, xnorm = 0;
    for (int b : {a + 2, a, a - 2}) {
      if (!adjacent(spec, a, b)) continue;
      ee += tri_e_tilde(spec, a, b) * tri_e(spec, a, b);
      xx += tri_x_tilde(spec, a, b) * tri_x(spec, a, b);
      ex += tri_e_tilde(spec, a, b) * tri_x(spec, a, b);
      xe += tri_x_tilde(spec, a, b) * tri_e(spec, a, b);
      enorm += std::abs(tri_e(spec, a, b));
      xnorm += std::abs(tri_x(spec, a, b));
    }
    if (enorm == 0) continue;  // no neighbours
    out.add("e~.e = beta2", std::abs(ee - k.beta2));
    out.add("e~.x = 0", std::abs(ex));
    // At a = 1 and a = m'-1 the vector x vanishes, so there is no Xi block to contract.
    if (xnorm < 1e-12) continue;
    out.add("x~.x = beta3/beta", std::abs(xx - k.beta3 / k.beta));
    out.add("x~.e = 0", std::abs(xe));
  }
  for (int h = 2; h + 1 <= spec.max_height(); ++h) {
    if (!adjacent(spec, h - 1, h + 1)) continue;
    out.add("y~.y = beta3/beta", std::abs(tri_y_tilde(spec, h, h + 1) + tri_y_tilde(spec, h, h - 1) - k.beta3 / k.beta));
  }
  out.finish();
  return rep;
}

AlgebraReport check_algebra(const OperatorRep& rep, double tol, std::optional<AlgebraConstants> kk, unsigned seed) {
  const AlgebraConstants k = kk.value_or(rep.k);
  const double b = k.beta, b2 = k.beta2, b3 = k.beta3;
  const Eigen::MatrixXd& I = rep.I;
  AlgebraReport report;
  Collector out(report, tol);
  for (int j = 1; j < rep.L; ++j) {
    const auto &E = rep.E[j], &Y = rep.Y[j], &Xi = rep.Xi[j];
    out.add("E_j^2 = beta2 E_j", E * E - b2 * E);
    out.add("Y_j^2 = (beta3/beta) Y_j", Y * Y - (b3 / b) * Y);
    out.add("E_j Xi_j = 0", E * Xi);
    out.add("Xi_j E_j = 0", Xi * E);
  }
  for (int j = 1; j < rep.L; ++j) {
    for (int kk2 : {j - 1, j + 1}) {
      if (kk2 < 1 || kk2 >= rep.L) continue;
      const auto &Ej = rep.E[j], &Yj = rep.Y[j], &Ek = rep.E[kk2], &Yk = rep.Y[kk2], &Xik = rep.Xi[kk2];
      const Eigen::MatrixXd Zj = Yj + Ej, Zk = Yk + Ek;
      out.add("E_j E_k E_j = E_j", Ej * Ek * Ej - Ej);
      out.add("beta E_j Xi_k E_j = (beta3/beta) E_j", b * Ej * Xik * Ej - (b3 / b) * Ej);
      out.add("Y1: E_j Y_k E_j = (beta3/beta) E_j", Ej * Yk * Ej - (b3 / b) * Ej);
      out.add("Y2: Y_j E_k E_j = (Y_k + E_k - 1) E_j", Yj * Ek * Ej - (Yk + Ek - I) * Ej);
      out.add("Y3: Y_j Y_k E_j = (beta3/beta - 1)(Y_k + E_k - 1) E_j", Yj * Yk * Ej - (b3 / b - 1) * (Yk + Ek - I) * Ej);
      out.add("Y4: (Y_j + E_j) E_k (Y_j + E_j) = (Y_k + E_k) E_j (Y_k + E_k)", Zj * Ek * Zj - Zk * Ej * Zk);
      const Eigen::MatrixXd cubic = Yj * Yk * Yj - Yk * Yj * Yk;
      const Eigen::MatrixXd bracket = Ek * Yj - Ej * Yk + Yj * Ek - Yk * Ej + Ej - Ek;
      out.add("Y5: Y_jY_kY_j - Y_kY_jY_k = beta^2 (...) + Y_j - Y_k", cubic - (b * b * bracket + Yj - Yk));
      out.add("Z1: E_j Z_k E_j = beta2 E_j", Ej * Zk * Ej - b2 * Ej);
      out.add("Z2: Z_j E_k E_j = Z_k E_j", Zj * Ek * Ej - Zk * Ej);
      out.add("Z3: Z_j Z_k E_j = ((beta2 - 1) Z_k + 1) E_j", Zj * Zk * Ej - ((b2 - 1) * Zk + I) * Ej);
      out.add("Z4: Z_j E_k Z_j = Z_k E_j Z_k", Zj * Ek * Zj - Zk * Ej * Zk);
      out.add("Z5: Y_jY_kY_j - Y_kY_jY_k = beta^2 (...) + Y_j - Y_k", cubic - (b * b * bracket + Yj - Yk));
      out.add("Y5/Z5 with beta^2 - 4 in place of beta^2", cubic - ((b * b - 4) * bracket + Yj - Yk), true);
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double u = dist(rng), v = dist(rng);
    for (int j = 1; j < rep.L; ++j) {
      out.add("face operator: X form = Xi form", rep.face(j, u) - rep.face_xi(j, u));
      out.add("face operator at u=0 is the identity", rep.face(j, 0.0) - I);
      if (j + 1 < rep.L) {
        out.add("operator YBE", rep.face(j, u) * rep.face(j + 1, u + v) * rep.face(j, v) -
                                    rep.face(j + 1, v) * rep.face(j, u + v) * rep.face(j + 1, u));
      }
    }
  }
  out.finish();
  return report;
}

void merge_into(AlgebraReport& total, const AlgebraReport& part) {
  for (const auto& r : part.relations) {
    bool found = false;
    for (auto& t : total.relations) {
      if (t.name == r.name) {
        t.residual = std::max(t.residual, r.residual);
        t.pass = t.pass && r.pass;
        found = true;
      }
    }
    if (!found) total.relations.push_back(r);
  }
  total.pass = true;
  for (const auto& t : total.relations)
    if (!t.diagnostic) total.pass = total.pass && t.pass;
}

}  // namespace rsos
