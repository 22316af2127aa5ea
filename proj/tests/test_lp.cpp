#include "doctest.h"

#include <cmath>
#include <random>

#include "gmac/error.hpp"
#include "gmac/lp.hpp"

using namespace gmac;

TEST_CASE("lp: textbook maximization") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
  lp::Problem p(2);
  p.objective = {3, 5};
  p.add_le({1, 0}, 4);
  p.add_le({0, 2}, 12);
  p.add_le({3, 2}, 18);
  const auto s = lp::solve(p);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == doctest::Approx(36));
  CHECK(s.x[0] == doctest::Approx(2));
  CHECK(s.x[1] == doctest::Approx(6));
  // Strong duality.
  double dual = 0;
  for (std::size_t i = 0; i < 3; ++i) dual += s.le_duals[i] * p.le_rhs[i];
  CHECK(dual == doctest::Approx(36));
}

TEST_CASE("lp: equalities, negative rhs and infeasibility") {
  lp::Problem p(2);
  p.objective = {-1, -1};
  p.add_eq({1, 1}, 1);
  p.add_le({-1, 0}, -0.25);  // x >= 0.25
  auto s = lp::solve(p);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == doctest::Approx(-1));
  CHECK(s.x[0] >= 0.25 - 1e-12);

  p.add_le({1, 0}, 0.1);
  CHECK(lp::solve(p).status == lp::Status::Infeasible);
}

TEST_CASE("lp: unbounded") {
  lp::Problem p(2);
  p.objective = {1, 0};
  p.add_le({0, 1}, 1);
  CHECK(lp::solve(p).status == lp::Status::Unbounded);
}

TEST_CASE("lp: iteration budget raises SolverStall") {
  lp::Problem p(2);
  p.objective = {3, 5};
  p.add_le({1, 0}, 4);
  p.add_le({0, 2}, 12);
  p.add_le({3, 2}, 18);
  lp::Options o;
  o.max_iterations = 1;
  try {
    (void)lp::solve(p, o);
    FAIL("expected SolverStall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SolverStall);
  }
}

TEST_CASE("lp: random feasible problems satisfy complementary conditions") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 4, m = 2 + trial % 5;
    lp::Problem p(n);
    for (auto& c : p.objective) c = u(rng) - 0.3;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> row(n);
      for (auto& v : row) v = u(rng);
      p.add_le(row, 1.0 + u(rng));
    }
    std::vector<double> sum(n, 1.0);
    p.add_le(sum, 5.0);
    const auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    double dual = 0;
    for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
      CHECK(s.le_duals[i] >= -1e-9);
      dual += s.le_duals[i] * p.le_rhs[i];
    }
    CHECK(dual == doctest::Approx(s.value).epsilon(1e-8));
    for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
      double lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += p.le_rows[i][j] * s.x[j];
      CHECK(lhs <= p.le_rhs[i] + 1e-9);
    }
  }
}
