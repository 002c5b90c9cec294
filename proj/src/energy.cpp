#include "rsos/energy.hpp"

#include <queue>
#include <set>
#include <stdexcept>

namespace rsos {

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.d) + "," + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

std::string interval_tag(LambdaInterval i) {
  return i == LambdaInterval::below_pi_over_n ? "lambda_below_pi_over_n" : "lambda_above_pi_over_n";
}

LocalEnergyTable::LocalEnergyTable(ModelSpec spec)
    : spec_(spec),
      stride_(spec.m_prime() + 1),
      entries_(static_cast<std::size_t>(stride_) * stride_ * stride_) {}

LambdaInterval LocalEnergyTable::interval() const {
  return spec_.lambda_below_pi_over(spec_.fusion()) ? LambdaInterval::below_pi_over_n
                                                    : LambdaInterval::above_pi_over_n;
}

bool LocalEnergyTable::admissible(int d, int a, int b) const {
  return adjacent(spec_, d, a) && adjacent(spec_, a, b);
}

std::size_t LocalEnergyTable::index(int d, int a, int b) const {
  return (static_cast<std::size_t>(d) * stride_ + a) * stride_ + b;
}

QExponent LocalEnergyTable::at(int d, int a, int b) const {
  if (!admissible(d, a, b)) {
    throw std::out_of_range("local energy lookup at inadmissible triple " + to_string(Triple{d, a, b}) + " for " +
                            describe(spec_));
  }
  const auto& v = entries_[index(d, a, b)];
  if (!v) throw std::out_of_range("local energy unset at " + to_string(Triple{d, a, b}));
  return *v;
}

void LocalEnergyTable::set(int d, int a, int b, QExponent value) {
  if (!admissible(d, a, b)) {
    throw std::out_of_range("cannot store inadmissible triple " + to_string(Triple{d, a, b}));
  }
  entries_[index(d, a, b)] = value;
}

std::vector<Triple> LocalEnergyTable::triples() const {
  std::vector<Triple> out;
  const int top = spec_.max_height();
  for (int d = 1; d <= top; ++d)
    for (int a = 1; a <= top; ++a)
      for (int b = 1; b <= top; ++b)
        if (admissible(d, a, b)) out.push_back({d, a, b});
  return out;
}

bool LocalEnergyTable::complete() const {
  for (const Triple& t : triples())
    if (!entries_[index(t.d, t.a, t.b)]) return false;
  return true;
}

namespace {

void check_well_formed(const LocalEnergyTable& t) {
  auto v = table_violations(t);
  if (!v.empty()) throw std::logic_error("generated table for " + describe(t.spec()) + " is malformed: " + v.front());
}

}  // namespace

LocalEnergyTable local_energy_n1(const ModelSpec& spec) {
  if (spec.fusion() != 1) throw std::invalid_argument("local_energy_n1 needs fusion 1");
  const BandStructure bs = band_structure(spec);
  auto h = [&](int a) { return bs.h_at(a); };
  LocalEnergyTable t(spec);
  for (const Triple& tr : t.triples()) {
    const int a = tr.a;
    std::int64_t q;
    if (tr.d == a + 1 && tr.b == a + 1) {
      q = 2 * (h(a + 1) - h(a));
    } else if (tr.d == a - 1 && tr.b == a - 1) {
      q = 2 * (h(a) - h(a - 1));
    } else {
      q = 2 - (h(a + 1) - h(a - 1));
    }
    t.set(tr.d, tr.a, tr.b, QExponent(q));
  }
  check_well_formed(t);
  return t;
}

namespace {

std::int64_t flat_energy_n2(const ModelSpec& spec, const BandStructure& bs, int a) {
  const int lo = bs.h_at(a - 1), mid = bs.h_at(a), hi = bs.h_at(a + 1);
  if (spec.lambda_below_pi_over(2)) return (lo == mid && mid == hi) ? 0 : 4;
  return (lo == mid || mid == hi) ? 0 : 4;
}

}  // namespace

LocalEnergyTable local_energy_n2(const ModelSpec& spec) {
  if (spec.fusion() != 2) throw std::invalid_argument("local_energy_n2 needs fusion 2");
  const BandStructure bs = band_structure(spec);
  auto h = [&](int a) { return static_cast<std::int64_t>(bs.h_at(a)); };
  const std::int64_t straight = spec.lambda_below_pi_over(2) ? 1 : 2;
  LocalEnergyTable t(spec);
  for (const Triple& tr : t.triples()) {
    const int a = tr.a, d = tr.d, b = tr.b;
    std::int64_t q;
    if (d != a && b != a && d != b) {
      q = 4 * (straight - (h(a + 1) - h(a - 1)));
    } else if (d == a && b == a) {
      q = flat_energy_n2(spec, bs, a);
    } else if (d == a || b == a) {
      q = 2;
    } else if (d == a + 2) {
      q = 4 * (h(a + 2) - h(a + 1));
    } else {
      q = 4 * (h(a - 1) - h(a - 2));
    }
    t.set(d, a, b, QExponent(q));
  }
  check_well_formed(t);
  return t;
}

LocalEnergyTable local_energy(const ModelSpec& spec) {
  return spec.fusion() == 1 ? local_energy_n1(spec) : local_energy_n2(spec);
}

LocalEnergyTable forrester_baxter_n1(const ModelSpec& spec) {
  if (spec.fusion() != 1) throw std::invalid_argument("forrester_baxter_n1 needs fusion 1");
  const BandStructure bs = band_structure(spec);
  LocalEnergyTable t(spec);
  for (const Triple& tr : t.triples()) {
    std::int64_t q;
    if (tr.d != tr.b) {
      q = 2;
    } else if (tr.d == tr.a + 1) {
      q = 4 * bs.h_at(tr.d);
    } else {
      q = -4 * bs.h_at(tr.d);
    }
    t.set(tr.d, tr.a, tr.b, QExponent(q));
  }
  return t;
}

LocalEnergyTable signed_local_energy_n2(const ModelSpec& spec) {
  if (spec.fusion() != 2) throw std::invalid_argument("signed_local_energy_n2 needs fusion 2");
  const BandStructure bs = band_structure(spec);
  auto h = [&](int a) { return static_cast<std::int64_t>(bs.h_at(a)); };
  const std::int64_t straight = spec.lambda_below_pi_over(2) ? 1 : 2;
  LocalEnergyTable t(spec);
  for (const Triple& tr : t.triples()) {
    const int a = tr.a, d = tr.d, b = tr.b;
    std::int64_t q;
    if (d != a && b != a && d != b) {
      q = 4 * straight;
    } else if (d == a && b == a) {
      q = flat_energy_n2(spec, bs, a);
    } else if (d == a || b == a) {
      const int outer = d == a ? b : d;
      q = outer > a ? 2 + 4 * h(a + 1) : 2 - 4 * h(a - 1);
    } else {
      // outer height x = d = b, center x +- 2
      const int x = d;
      q = a > x ? -4 * (h(x) + h(x + 1)) : 4 * (h(x) + h(x - 1));
    }
    t.set(d, a, b, QExponent(q));
  }
  return t;
}

std::vector<std::string> table_violations(const LocalEnergyTable& t) {
  std::vector<std::string> out;
  const ModelSpec& spec = t.spec();
  const int mp = spec.m_prime();
  const std::set<std::int64_t> allowed = spec.fusion() == 1 ? std::set<std::int64_t>{0, 1, 2}
                                                            : std::set<std::int64_t>{0, 2, 4, 8};
  if (!t.complete()) out.push_back("table is incomplete");
  for (const Triple& tr : t.triples()) {
    const QExponent v = t.at(tr);
    if (v.quarters < 0) out.push_back("negative entry at " + to_string(tr));
    if (!allowed.count(v.quarters)) out.push_back("unexpected value " + to_string(v) + " at " + to_string(tr));
    if (t.at(tr.b, tr.a, tr.d) != v) out.push_back("reflection fails at " + to_string(tr));
    if (t.at(mp - tr.d, mp - tr.a, mp - tr.b) != v) out.push_back("height reversal fails at " + to_string(tr));
  }
  return out;
}

Rational GaugeFunction::at(int a) const {
  auto it = G.find(a);
  return it == G.end() ? Rational(0) : it->second;
}

GaugeFunction nonnegative_gauge_n2(const ModelSpec& spec) {
  const BandStructure bs = band_structure(spec);
  GaugeFunction g;
  g.G[1] = 0;
  g.G[2] = 0;
  for (int a = 2; a + 1 <= spec.max_height(); ++a) g.G[a + 1] = g.G[a - 1] + bs.h_at(a);
  return g;
}

LocalEnergyTable apply_gauge(const LocalEnergyTable& t, const GaugeFunction& g, bool require_nonnegative) {
  LocalEnergyTable out(t.spec());
  for (const Triple& tr : t.triples()) {
    Rational v = Rational(t.at(tr).quarters, 4) + 2 * g.at(tr.a) - g.at(tr.d) - g.at(tr.b);
    Rational q = v * 4;
    if (q.denominator() != 1) throw std::domain_error("gauged entry " + to_string(v) + " at " + to_string(tr) +
                                                      " is not a multiple of 1/4");
    if (require_nonnegative && q.numerator() < 0) {
      throw std::domain_error("gauged entry " + to_string(v) + " at " + to_string(tr) + " is negative");
    }
    out.set(tr.d, tr.a, tr.b, QExponent(q.numerator()));
  }
  return out;
}

std::optional<GaugeFunction> solve_gauge(const LocalEnergyTable& from, const LocalEnergyTable& to) {
  if (!(from.spec() == to.spec())) throw std::invalid_argument("solve_gauge needs tables of one model");
  const ModelSpec& spec = from.spec();
  const int top = spec.max_height();
  // Peak/valley triples (x, y, x) give G_y - G_x = (to - from)/2.
  auto diff = [&](int x, int y) {
    return Rational(to.at(x, y, x).quarters - from.at(x, y, x).quarters, 8);
  };
  GaugeFunction g;
  for (int start = 1; start <= top; ++start) {
    if (g.G.count(start)) continue;
    g.G[start] = 0;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      for (int y = 1; y <= top; ++y) {
        if (y == x || !adjacent(spec, x, y) || g.G.count(y)) continue;
        g.G[y] = g.G[x] + diff(x, y);
        todo.push(y);
      }
    }
  }
  try {
    if (apply_gauge(from, g) == to) return g;
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

DualityReport duality_check(const LocalEnergyTable& t, const LocalEnergyTable& dual) {
  if (t.spec().m_prime() != dual.spec().m_prime() || t.spec().fusion() != dual.spec().fusion()) {
    throw std::invalid_argument("duality check needs tables over the same heights and fusion level");
  }
  const std::int64_t total = 2 * t.spec().fusion();  // n/2 in quarters
  DualityReport rep;
  for (const Triple& tr : t.triples()) {
    ++rep.checked;
    if (t.at(tr).quarters != total - dual.at(tr).quarters) rep.mismatches.push_back(tr);
  }
  rep.pass = rep.mismatches.empty();
  return rep;
}

DualityReport duality_check(const ModelSpec& spec) {
  return duality_check(local_energy(spec), local_energy(spec.dual()));
}

QExponent path_energy(const LocalEnergyTable& t, const RsosPath& path) {
  if (!(path.spec() == t.spec())) throw std::invalid_argument("path and table belong to different models");
  QExponent e;
  for (int j = 1; j <= path.length(); ++j) e += t.at(path[j - 1], path[j], path[j + 1]) * j;
  return e;
}

}  // namespace rsos
