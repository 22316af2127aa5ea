#include "doctest.h"

#include <cmath>
#include <random>

#include "gmac/error.hpp"
#include "gmac/regions.hpp"

using namespace gmac;

namespace {

RatePolytope box(double a, double b) {
  RatePolytope p{{"R0", "R1"}, {}, {}};
  p.le({1, 0}, a).le({0, 1}, b);
  return p;
}

}  // namespace

TEST_CASE("regions: vertices of a simplex-like piece") {
  RatePolytope p{{"R0", "R1"}, {}, {}};
  p.le({1, 1}, 2).le({0, 1}, 1);
  const auto v = vertices(p);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == Point{0, 0});
  CHECK(v[1] == Point{0, 1});
  CHECK(v[2][0] == doctest::Approx(1));
  CHECK(v[3] == Point{2, 0});
}

TEST_CASE("regions: positive-part split with shared lhs") {
  // Re <= [0.5 - 0]_+ and Re <= [1 - R0]_+ over (R0, Re).
  PolytopeTemplate t{RatePolytope{{"R0", "Re"}, {}, {}}, {}};
  t.base.le({1, 0}, 3);
  t.positive_parts.push_back({{0, 1}, 0.5, {0, 0}});
  t.positive_parts.push_back({{0, 1}, 1.0, {-1, 0}});
  const auto split = split_positive_parts(t);
  CHECK(split.pieces.size() == 2);
  CHECK(split.dropped_empty == 0);
  CHECK(support(split.pieces[0], {0, 1}) == doctest::Approx(0.5));
  CHECK(support(split.pieces[1], {1, 0}) == doctest::Approx(3));
  CHECK(support(split.pieces[1], {0, 1}) == doctest::Approx(0));

  // A negative constant bracket pins the lhs to zero and never splits.
  PolytopeTemplate n{RatePolytope{{"R0", "Re"}, {}, {}}, {{{0, 1}, -0.2, {0, 0}}}};
  n.base.le({1, 0}, 1);
  const auto ns = split_positive_parts(n);
  REQUIRE(ns.pieces.size() == 1);
  CHECK(support(ns.pieces[0], {0, 1}) == doctest::Approx(0));

  PolytopeTemplate bad{RatePolytope{{"R0", "Re"}, {}, {}}, {{{-1, 1}, 1, {0, 0}}}};
  CHECK_THROWS_AS(split_positive_parts(bad), Error);
}

TEST_CASE("regions: empty branch is dropped and counted") {
  // Affine branch needs R0 >= 2 but R0 <= 1.
  PolytopeTemplate t{RatePolytope{{"R0", "Re"}, {}, {}}, {{{0, 1}, -2, {1, 0}}}};
  t.base.le({1, 0}, 1).le({-1, 0}, -0.5);
  t.positive_parts[0].constant = -2;
  const auto s = split_positive_parts(t);
  // Affine branch: Re <= R0 - 2 with R0 <= 1 is infeasible (Re >= 0).
  CHECK(s.pieces.size() == 1);
  CHECK(s.dropped_empty == 1);
}

TEST_CASE("regions: support and containment of a union and its hull") {
  RateRegion r;
  r.add(box(1, 0.2), 0);
  r.add(box(0.2, 1), 1);
  CHECK(support(r, {1, 1}) == doctest::Approx(1.2));
  CHECK(contains(r, {0.9, 0.1}));
  CHECK_FALSE(contains(r, {0.6, 0.6}));
  const auto h = convexify(r);
  CHECK(support(h, {1, 1}) == doctest::Approx(1.2));
  CHECK(contains(h, {0.6, 0.6}));
  CHECK_FALSE(contains(h, {0.6, 0.61}));
  CHECK(hull_distance(*h.hull_points, {0.7, 0.7}) == doctest::Approx(0.1));
  CHECK(h.hull_sources.size() == h.hull_points->size());
}

TEST_CASE("regions: unit box frontier") {
  RateRegion r;
  r.add(box(1, 1));
  const auto f = frontier(r, {"R0", "R1"}, {}, 64);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::array<double, 2>{0, 1});
  CHECK(f[1] == std::array<double, 2>{1, 1});
  CHECK(f[2] == std::array<double, 2>{1, 0});
  const auto fh = frontier(convexify(r), {"R0", "R1"}, {}, 64);
  REQUIRE(fh.size() == 3);
  CHECK(fh[1][0] == doctest::Approx(1));
  CHECK(fh[1][1] == doctest::Approx(1));
}

TEST_CASE("regions: frontier with fixed coordinate and empty slice") {
  RatePolytope p{{"R0", "R1", "Re"}, {}, {}};
  p.le({1, 1, 0}, 2).le({0, 0, 1}, 1).le({0, 1, 1}, 1.5);
  RateRegion r;
  r.add(p);
  const auto f = frontier(r, {"R0", "R1"}, {{"Re", 1.0}}, 16);
  double best_r1 = 0;
  for (const auto& q : f) best_r1 = std::max(best_r1, q[1]);
  CHECK(best_r1 == doctest::Approx(0.5));
  try {
    (void)frontier(r, {"R0", "R1"}, {{"Re", 2.0}}, 16);
    FAIL("expected EmptySlice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySlice);
  }
  const auto fh = frontier(convexify(r), {"R0", "R1"}, {{"Re", 1.0}}, 16);
  double hb = 0;
  for (const auto& q : fh) hb = std::max(hb, q[1]);
  CHECK(hb == doctest::Approx(0.5));
}

TEST_CASE("regions: frontier csv format") {
  const auto csv = frontier_csv({{0.0, 1.0}, {0.5, 0.123456789012}}, {"R0", "R1"});
  CHECK(csv == "R0,R1\n0,1\n0.5,0.123456789\n");
}

TEST_CASE("regions: hull support equals union support in random directions") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    RateRegion r;
    for (int k = 0; k < 3; ++k) {
      RatePolytope p{{"A", "B", "C"}, {}, {}};
      p.le({1, 0, 0}, u(rng)).le({0, 1, 0}, u(rng)).le({0, 0, 1}, u(rng)).le({1, 1, 1}, 2 * u(rng));
      r.add(p, static_cast<std::size_t>(k));
    }
    const auto h = convexify(r);
    for (int d = 0; d < 5; ++d) {
      std::vector<double> dir{u(rng), u(rng) - 0.5, u(rng)};
      CHECK(support(h, dir) == doctest::Approx(support(r, dir)).epsilon(1e-9));
    }
    // Vertices of a piece lie in the hull; pushing out along a support normal leaves it.
    for (const auto& v : *h.hull_points) CHECK(contains(h, v));
    const double s = support(h, {1, 1, 1});
    CHECK_FALSE(contains(h, {s / 3 + 0.01, s / 3 + 0.01, s / 3 + 0.01}));
  }
}
