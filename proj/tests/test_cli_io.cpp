#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unigen/families.hpp"
#include "unigen/io.hpp"

using namespace unigen;

namespace {

QMat eij(int n, int i, int j) {
  QMat m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

}  // namespace

TEST_CASE("family_gn: dimension and bracket relations") {
  for (int n = 3; n <= 7; ++n) {
    auto g = family_gn(n);
    CHECK(g.dim_V == n);
    CHECK(g.dim() == n);
    CHECK(check_rep(g).valid());
    // [x_i, x_n] = -x_{i+1} or x_{i+1} up to the chosen sign, for 1 <= i <= n-2:
    // x_i x_n = e_{1,i+1} * sum e_{j,j+1} = e_{1,i+2}; x_n x_i = 0.
    for (int i = 0; i + 2 < n; ++i) {
      QMat b = bracket(g.basis[i], g.basis[n - 1]);
      CHECK(b == g.basis[i + 1]);
    }
    // [x_{n-1}, x_n] = e_{1,n} * x_n = 0
    CHECK(bracket(g.basis[n - 2], g.basis[n - 1]).is_zero());
  }
}

TEST_CASE("family_hn: dimension and bracket relations") {
  for (int n = 4; n <= 7; ++n) {
    auto g = family_hn(n);
    CHECK(g.dim_V == n);
    CHECK(g.dim() == n - 1);
    CHECK(check_rep(g).valid());
    // [y_1, y_k] = sum_i (i - (i+k)) e_{i,i+k+1} = -k y_{k+1} for 2 <= k <= n-2
    for (int k = 2; k + 1 <= n - 1; ++k) {
      QMat b = bracket(g.basis[0], g.basis[k - 1]);
      CHECK(b == scale(g.basis[k], Rat(-k)));
    }
  }
}

TEST_CASE("family argument validation") {
  CHECK_THROWS_AS(family_gn(2), invalid_input);
  CHECK_THROWS_AS(family_hn(3), invalid_input);
}

TEST_CASE("problem round trip") {
  ProblemFile p = builtin_example();
  CHECK(p.dimension == 4);
  CHECK(p.rep.dim() == 3);
  CHECK(p.rep.basis[0] == eij(4, 1, 3));

  std::string text = serialize_problem(p);
  ProblemFile q = parse_problem(text);
  CHECK(q.dimension == p.dimension);
  REQUIRE(q.rep.dim() == p.rep.dim());
  for (int i = 0; i < p.rep.dim(); ++i) CHECK(q.rep.basis[i] == p.rep.basis[i]);
  CHECK(q.options.verify == p.options.verify);
  CHECK(q.options.support_optimization == p.options.support_optimization);
  CHECK(q.lattice.has_value() == p.lattice.has_value());
}

TEST_CASE("problem with rational lattice and flag round trip") {
  ProblemFile p = builtin_example();
  QMat lb = QMat::identity(4);
  lb(0, 0) = Rat(1, 2);
  p.lattice = lb;
  auto f = compute_flag(p.rep);
  p.flag = f.subspaces;
  std::string text = serialize_problem(p);
  ProblemFile q = parse_problem(text);
  REQUIRE(q.lattice.has_value());
  CHECK(*q.lattice == lb);
  REQUIRE(q.flag.has_value());
  CHECK(q.flag->size() == f.subspaces.size());
}

TEST_CASE("parse_problem: malformed input rejected") {
  CHECK_THROWS_AS(parse_problem("not json"), invalid_input);
  CHECK_THROWS_AS(parse_problem("{}"), invalid_input);
  CHECK_THROWS_AS(parse_problem(R"({"dimension": 2, "basis": [[["1","0"],["0","1","0"]]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_problem(R"({"dimension": 2, "basis": [[["0","1/0"],["0","0"]]]})"),
                  invalid_input);
}

TEST_CASE("result round trip") {
  ProblemFile p = builtin_example();
  auto res = compute_generators(p.rep);
  ResultFile r;
  r.dimension = 4;
  r.generators = res.generators;
  r.hirsch_length = res.hirsch_length();
  r.levels = res.level_sizes();
  r.verification = verify(res);
  r.timing.generators = 0.25;

  std::string text = serialize_result(r);
  ResultFile r2 = parse_result(text);
  CHECK(r2.dimension == 4);
  CHECK(r2.hirsch_length == 3);
  REQUIRE(r2.generators.size() == r.generators.size());
  for (size_t i = 0; i < r.generators.size(); ++i) CHECK(r2.generators[i] == r.generators[i]);
  CHECK(r2.levels == r.levels);
  REQUIRE(r2.verification.has_value());
  CHECK(r2.verification->all_ok());
}

TEST_CASE("rationals serialized as strings, never floats") {
  ProblemFile p = builtin_example();
  QMat lb = QMat::identity(4);
  lb(0, 0) = Rat(1, 2);
  p.lattice = lb;
  std::string text = serialize_problem(p);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("0.5") == std::string::npos);
}

TEST_CASE("families: generating sets computed end to end (small n)") {
  auto g4 = family_gn(4);
  auto r4 = compute_generators(g4);
  CHECK(r4.hirsch_length() == 4);
  CHECK(verify(r4).all_ok());

  auto h4 = family_hn(4);
  auto rh4 = compute_generators(h4);
  CHECK(rh4.hirsch_length() == 3);
  CHECK(verify(rh4).all_ok());
}
