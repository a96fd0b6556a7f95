#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unigen/matrix.hpp"

using namespace unigen;

TEST_CASE("mul matches mul_serial on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 40, m = 1 + (trial * 7) % 40, k = 1 + (trial * 13) % 40;
    QMat a = testutil::random_rat_matrix(n, m, -9, 9, 5, rng);
    QMat b = testutil::random_rat_matrix(m, k, -9, 9, 5, rng);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("mul matches mul_serial above the parallel threshold") {
  std::mt19937 rng(7);
  QMat a = testutil::random_rat_matrix(96, 96, -4, 4, 3, rng);
  QMat b = testutil::random_rat_matrix(96, 96, -4, 4, 3, rng);
  CHECK(mul(a, b) == mul_serial(a, b));
}

TEST_CASE("mul: shape errors and empty operands") {
  QMat a(2, 3), b(4, 2);
  CHECK_THROWS_AS(mul(a, b), invalid_input);
  QMat e(0, 3), f(3, 0);
  CHECK(mul(e, f).rows() == 0);
  CHECK(mul(QMat(3, 0), QMat(0, 2)) == QMat(3, 2));
}
