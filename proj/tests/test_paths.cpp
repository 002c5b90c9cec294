#include "oracles.hpp"
#include "rsos/energy.hpp"
#include "rsos/paths.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace rsos;

namespace {

std::vector<std::vector<int>> heights_of(const std::vector<RsosPath>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.heights());
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  const ModelSpec s(2, 5);
  CHECK(heights_of(enumerate_paths(s, 3, 3, 3, 2)) == std::vector<std::vector<int>>{{3, 1, 3, 3}, {3, 3, 3, 3}});
  CHECK(heights_of(enumerate_paths(s, 1, 3, 3, 2)) == std::vector<std::vector<int>>{{1, 3, 3, 3}});
  CHECK(enumerate_paths(s, 1, 3, 3, 0).empty());
  CHECK(enumerate_paths(s, 2, 3, 3, 4).empty());
  CHECK(count_paths(s, 3, 3, 3, 0) == 1);
}

TEST_CASE("enumeration against a direct walk oracle") {
  for (auto [m, mp] : {std::pair{2, 5}, {3, 7}, {4, 9}, {3, 10}}) {
    const ModelSpec s(m, mp);
    const oracle::FusedModel fm(m, mp);
    for (int a = 1; a < mp; ++a)
      for (int b = 1; b < mp; ++b)
        for (int c = 1; c < mp; ++c) {
          if (!fm.step(b, c)) continue;
          for (int N = 0; N <= 4; ++N) {
            const auto sum = oracle::one_dim_sum(fm, a, b, c, N, [](int, int, int) { return 0; });
            const long long expected = sum.empty() ? 0 : sum.begin()->second;
            CHECK(count_paths(s, a, b, c, N) == static_cast<std::uint64_t>(expected));
          }
        }
  }
}

TEST_CASE("paths come out sorted and unique") {
  const auto ps = enumerate_paths(ModelSpec(3, 7), 3, 3, 3, 5);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(seen.insert(ps[i].heights()).second);
    if (i) CHECK(ps[i - 1].heights() < ps[i].heights());
  }
}

TEST_CASE("ground states") {
  CHECK(ground_state_heights(ModelSpec(4, 11)) == std::vector<int>{2, 3, 5, 6, 8, 9});
  CHECK(ground_state_heights(ModelSpec(2, 5)) == std::vector<int>{2, 3});
  CHECK(ground_state_heights(ModelSpec(3, 7)) == std::vector<int>{2, 3, 4, 5});
  CHECK(ground_states(ModelSpec(4, 11)).size() == 6);
}

TEST_CASE("zero-energy paths are exactly the flat ground states") {
  for (int mp = 5; mp <= 11; ++mp)
    for (int m = 2; 2 * m < mp; ++m) {
      if (std::gcd(m, mp) != 1) continue;
      const ModelSpec s(m, mp);
      const LocalEnergyTable t = local_energy(s);
      const auto gs = ground_state_heights(s);
      CHECK(gs.size() == static_cast<std::size_t>(2 * (m - 1)));
      for (int N = 1; N <= 4; ++N)
        for (int a = 1; a < mp; ++a)
          for (int b = 1; b < mp; ++b) {
            if (!adjacent(s, b, b)) continue;
            for (const auto& p : enumerate_paths(s, a, b, b, N)) {
              const bool flat = std::all_of(p.heights().begin(), p.heights().end(), [&](int x) { return x == a; });
              const bool ground = flat && std::find(gs.begin(), gs.end(), a) != gs.end();
              CHECK((path_energy(t, p) == QExponent(0)) == ground);
            }
          }
    }
}

TEST_CASE("JM path constraints") {
  // doubled heights
  CHECK_NOTHROW(JmPath(1, {2, 3, 4, 3, 4, 3}));
  CHECK_NOTHROW(JmPath(1, {4, 3, 4, 3, 4, 3}));
  CHECK_THROWS(JmPath(1, {3, 4, 3, 4}));     // starts at half-integer
  CHECK_THROWS(JmPath(1, {2, 3, 4, 5}));     // leaves the strip
  CHECK_THROWS(JmPath(1, {2, 3, 2, 3, 4, 3}));  // peak at a half-integer time
  CHECK_THROWS(JmPath(1, {2, 3, 4, 3, 2, 3}));  // last half-step goes up
  CHECK_THROWS(JmPath(1, {2, 3, 4, 5, 4, 3}));  // out of range for k=1
  CHECK(to_string(JmPath(1, {2, 3, 4, 3})) == "(1,3/2,2,3/2)");
}

TEST_CASE("JM decimation examples") {
  CHECK(jm_to_rsos(JmPath(1, {2, 3, 4, 3, 4, 3, 4, 3})).heights() == std::vector<int>{1, 3, 3, 3, 3});
  CHECK(jm_to_rsos(JmPath(1, {4, 3, 4, 3, 4, 3})).heights() == std::vector<int>{3, 3, 3, 3});
  const ModelSpec s = jm_model(1);
  CHECK(rsos_to_jm(RsosPath(s, {3, 3, 3, 3})) == JmPath(1, {4, 3, 4, 3, 4, 3}));
  CHECK_THROWS(rsos_to_jm(RsosPath(s, {2, 2, 2})));
  CHECK_THROWS(rsos_to_jm(RsosPath(s, {3, 3, 1})));
}

TEST_CASE("JM round trips") {
  for (int k = 1; k <= 2; ++k)
    for (int N = 1; N <= 6; ++N)
      for (const JmPath& p : enumerate_jm_paths(k, N)) CHECK(rsos_to_jm(jm_to_rsos(p)) == p);
}

TEST_CASE("JM energy") {
  // 8E = sum_i i |d[i+1] - d[i-1]|
  CHECK(jm_energy(JmPath(1, {4, 3, 4, 3, 4, 3})) == QExponent(0));
  CHECK(jm_energy(JmPath(1, {2, 3, 4, 3})) == QExponent(1));
  CHECK(jm_energy(JmPath(1, {2, 3, 4, 3, 2, 3, 4, 3})) == QExponent(9));
}

TEST_CASE("JM bijection report") {
  for (int k = 1; k <= 2; ++k)
    for (int N = 1; N <= 5; ++N) {
      const JmReport r = jm_check(k, N);
      CHECK(r.bijection);
      CHECK(r.jm_count == r.rsos_count);
      CHECK(r.boundary_relation);
    }
  CHECK(!jm_check(1, 2).half_energy_constant);
}
