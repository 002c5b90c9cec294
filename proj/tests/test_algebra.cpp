#include "oracles.hpp"
#include "rsos/algebra.hpp"

#include <doctest.h>

#include <functional>

using namespace rsos;

namespace {

const RelationResult* find(const AlgebraReport& r, const std::string& prefix) {
  for (const auto& x : r.relations)
    if (x.name.rfind(prefix, 0) == 0) return &x;
  return nullptr;
}

long long fused_words(int m, int mp, int L) {
  const oracle::FusedModel fm(m, mp);
  long long total = 0;
  std::function<void(int, int)> go = [&](int at, int left) {
    if (left == 0) {
      ++total;
      return;
    }
    for (int y = 1; y < mp; ++y)
      if (fm.step(at, y)) go(y, left - 1);
  };
  for (int a = 1; a < mp; ++a) go(a, L);
  return total;
}

}  // namespace

TEST_CASE("loop contractions") {
  for (auto [m, mp] : {std::pair{2, 5}, {3, 7}, {4, 9}, {3, 11}}) {
    const AlgebraReport r = check_loop_contractions(ModelSpec(m, mp));
    CHECK(r.pass);
    CHECK(r.relations.size() == 5);
  }
}

TEST_CASE("constants") {
  const AlgebraConstants k = AlgebraConstants::from_lambda(0.7);
  CHECK(k.beta == doctest::Approx(2 * std::cos(0.7)));
  // beta2 = beta^2 - 1 and beta3 = beta^3 - 2 beta
  CHECK(k.beta2 == doctest::Approx(k.beta * k.beta - 1));
  CHECK(k.beta3 == doctest::Approx(k.beta * k.beta * k.beta - 2 * k.beta));
  CHECK(S_normalized(ModelSpec(2, 5), 1) == doctest::Approx(1.0));
}

TEST_CASE("basis") {
  for (auto [m, mp, L] : {std::tuple{2, 5, 3}, {3, 7, 4}, {4, 9, 3}}) {
    const OperatorRep rep = build_operator_rep(ModelSpec(m, mp), L);
    CHECK(static_cast<long long>(rep.basis.size()) == fused_words(m, mp, L));
    CHECK(rep.E.size() == static_cast<std::size_t>(L));
    for (int j = 1; j < L; ++j) CHECK((rep.Y[j] - rep.k.beta * rep.Xi[j]).cwiseAbs().maxCoeff() < 1e-12);
  }
  const OperatorRep fixed = build_operator_rep(ModelSpec(3, 7), 4, 3);
  for (const auto& p : fixed.basis) CHECK(p.front() == 3);
}

TEST_CASE("relations") {
  for (auto [m, mp] : {std::pair{2, 5}, {3, 7}, {4, 9}}) {
    const OperatorRep rep = build_operator_rep(ModelSpec(m, mp), 4);
    const AlgebraReport r = check_algebra(rep);
    for (const auto& x : r.relations) {
      const bool printed_cubic = x.name.rfind("Y5:", 0) == 0 || x.name.rfind("Z5:", 0) == 0;
      if (printed_cubic)
        CHECK_MESSAGE(!x.pass, x.name);
      else
        CHECK_MESSAGE(x.pass, x.name, " residual ", x.residual);
    }
    const RelationResult* diag = find(r, "Y5/Z5 with beta^2 - 4");
    REQUIRE(diag != nullptr);
    CHECK(diag->diagnostic);
    CHECK(diag->residual < 1e-10);
    CHECK(!r.pass);
  }
}

TEST_CASE("wrong constants are caught") {
  const OperatorRep rep = build_operator_rep(ModelSpec(3, 7), 4);
  AlgebraConstants k = rep.k;
  k.beta2 += 0.01;
  const AlgebraReport r = check_algebra(rep, 1e-10, k);
  const RelationResult* e2 = find(r, "E_j^2");
  REQUIRE(e2 != nullptr);
  CHECK(!e2->pass);
  CHECK(find(check_algebra(rep), "E_j^2")->pass);
}

TEST_CASE("merging keeps the worst residual") {
  AlgebraReport a, b;
  a.relations.push_back({"x", 1e-15, true, false});
  b.relations.push_back({"x", 1.0, false, false});
  b.relations.push_back({"y", 0.0, true, false});
  b.pass = false;
  merge_into(a, b);
  CHECK(!a.pass);
  REQUIRE(a.relations.size() == 2);
  CHECK(find(a, "x")->residual == 1.0);
}
