#include "rsos/model.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <numeric>

using namespace rsos;

TEST_CASE("spec validation") {
  CHECK_NOTHROW(ModelSpec(2, 5));
  CHECK_THROWS_AS(ModelSpec(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(2, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(2, 5, 0), std::invalid_argument);
  CHECK(describe(ModelSpec(2, 5)) == "RSOS(2,5) n=2");
}

TEST_CASE("lambda interval test is exact") {
  CHECK(ModelSpec(2, 5).lambda_over_pi() == Rational(3, 5));
  CHECK(!ModelSpec(2, 5).lambda_below_pi_over(2));
  CHECK(ModelSpec(7, 11).lambda_below_pi_over(2));
  CHECK(ModelSpec(3, 4).lambda_below_pi_over(1));
}

TEST_CASE("band structures") {
  const BandStructure b513 = band_structure(ModelSpec(5, 13));
  CHECK(b513.rho == std::vector<int>{2, 5, 7, 10});
  CHECK(b513.rho0 == std::vector<int>{2, 6, 8, 10});
  CHECK(b513.rho1 == std::vector<int>{3, 5, 7, 11});
  const BandStructure b411 = band_structure(ModelSpec(4, 11));
  CHECK(b411.rho == std::vector<int>{2, 5, 8});
  CHECK(b411.rho0 == std::vector<int>{2, 6, 8});
  CHECK(b411.rho1 == std::vector<int>{3, 5, 9});
  CHECK(band_structure(ModelSpec(7, 11)).rho == std::vector<int>{1, 3, 4, 6, 7, 9});
}

TEST_CASE("band invariants over many models") {
  for (int mp = 3; mp <= 20; ++mp)
    for (int m = 2; m < mp; ++m) {
      if (std::gcd(m, mp) != 1) continue;
      const ModelSpec spec(m, mp);
      const BandStructure bs = band_structure(spec);
      int zeros = 0, runs = 0;
      for (int a = 0; a < mp; ++a) {
        CHECK(bs.h[a] == a * (mp - m) / mp);
        CHECK((bs.delta[a] == 0 || bs.delta[a] == 1));
        zeros += a > 0 && bs.delta[a] == 0;
        if (a > 0) runs += bs.delta[a] == 0 && bs.delta[a - 1] == 0;
      }
      CHECK(zeros == m - 1);
      for (int r = 1; r < m; ++r) CHECK(bs.shaded(bs.rho[r - 1]));
      if (mp > 2 * m) CHECK(runs == 0);
      if (mp - m >= 2) {
        const BandStructure dual = band_structure(spec.dual());
        for (int a = 1; a < mp - 1; ++a) CHECK(bs.delta[a] == 1 - dual.delta[a]);
      }
    }
}

TEST_CASE("shaded band counts") {
  CHECK(shaded_nband_count(ModelSpec(7, 11), 2) == 2);
  CHECK(shaded_nband_scan(ModelSpec(7, 11), 2) == 2);
  CHECK(shaded_nband_count(ModelSpec(4, 11), 2) == 0);
  for (int mp = 4; mp <= 14; ++mp) CHECK(shaded_nband_count(ModelSpec(mp - 1, mp), 1) == mp - 2);
  for (int mp = 3; mp <= 25; ++mp)
    for (int m = 2; m < mp; ++m)
      if (std::gcd(m, mp) == 1)
        for (int n = 1; n <= 3; ++n) CHECK(shaded_nband_count(ModelSpec(m, mp), n) == shaded_nband_scan(ModelSpec(m, mp), n));
}

TEST_CASE("conformal data") {
  CHECK(central_charge(ModelSpec(2, 5)) == Rational(-22, 5));
  CHECK(central_charge(ModelSpec(3, 4)) == Rational(1, 2));
  for (int mp = 4; mp <= 12; ++mp) CHECK(central_charge(ModelSpec(mp - 1, mp)) == 1 - Rational(6, mp * (mp - 1)));
  CHECK(conformal_weight(ModelSpec(2, 5), 1, 1) == Rational(0));
  CHECK(conformal_weight(ModelSpec(2, 5), 1, 2) == Rational(-1, 5));
  CHECK(conformal_weight(ModelSpec(3, 7), 1, 1) == Rational(0));
  CHECK_THROWS_AS(conformal_weight(ModelSpec(2, 5), 2, 1), std::out_of_range);
  const ModelSpec s(4, 11);
  for (int r = 1; r < 4; ++r)
    for (int q = 1; q < 11; ++q) CHECK(conformal_weight(s, r, q) == conformal_weight(s, 4 - r, 11 - q));
}

TEST_CASE("sector map") {
  CHECK(sector_map(ModelSpec(2, 5), 1, 1) == Heights{1, 3, 3});
  CHECK(sector_map(ModelSpec(2, 5), 1, 2) == Heights{2, 2, 2});
  CHECK(sector_map(ModelSpec(4, 11), 2, 3) == Heights{3, 5, 5});
  CHECK_THROWS_AS(sector_map(ModelSpec(7, 11), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sector_map(ModelSpec(2, 5, 1), 1, 1), std::invalid_argument);
  for (auto [m, mp] : {std::pair{2, 5}, {3, 7}, {4, 11}, {3, 8}, {5, 11}}) {
    const ModelSpec spec(m, mp);
    for (int r = 1; r < m; ++r)
      for (int s = 1; s < mp; ++s) {
        const Heights h = sector_map(spec, r, s);
        const Heights k = sector_map(spec, m - r, mp - s);
        CHECK(h.a == s);
        CHECK(h.b == h.c);
        CHECK(k.a == mp - h.a);
        CHECK(k.b == mp - h.b);
      }
  }
}

TEST_CASE("fused adjacency") {
  const ModelSpec s(2, 5);
  CHECK(!adjacent(s, 1, 1));
  CHECK(adjacent(s, 1, 3));
  CHECK(adjacent(s, 3, 3));
  CHECK(adjacent(s, 2, 2));
  CHECK(!adjacent(s, 4, 4));
  CHECK(!adjacent(s, 1, 2));
  CHECK(adjacent(ModelSpec(2, 5, 1), 1, 2));
  CHECK(!adjacent(ModelSpec(2, 5, 1), 1, 3));
}
