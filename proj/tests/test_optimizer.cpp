#include "doctest.h"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "gmac/error.hpp"
#include "gmac/examples.hpp"
#include "gmac/optimizer.hpp"
#include "test_support.hpp"

using namespace gmac;
using namespace gmac::testing;

namespace {

double h2(double p) { return p <= 0 || p >= 1 ? 0.0 : -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

bool rows_are_distributions(const SchemeShape& shape, const SchemeParams& p) {
  std::size_t off = 0;
  for (const auto& b : scheme_layout(shape)) {
    for (std::size_t r = 0; r < b.rows; ++r, off += b.cols) {
      double s = 0.0;
      for (std::size_t c = 0; c < b.cols; ++c) {
        if (p[off + c] < 0.0) return false;
        s += p[off + c];
      }
      if (std::abs(s - 1.0) > 1e-12) return false;
    }
  }
  return off == p.size();
}

SearchConfig small_config() {
  SearchConfig c;
  c.sample_count = 300;
  c.refine_iterations = 60;
  c.jobs = 1;
  return c;
}

}  // namespace

TEST_CASE("layout sizes and round trip") {
  SchemeShape s{SchemeKind::TwoSet, 2, 3, 2, 2, 3};
  CHECK(parameter_count(s) == 2 + 2 * 3 + 3 * 2 + 2 * 2 + 2 * 3);
  const auto ch = examples::clean_mac();
  for (SchemeKind k : {SchemeKind::OneSet, SchemeKind::Outer, SchemeKind::TwoSet, SchemeKind::Degraded}) {
    SchemeShape shape{k, 2, 3, 2, 2, 2};
    if (k == SchemeKind::Degraded) shape.u = 1;
    if (k == SchemeKind::OneSet || k == SchemeKind::Degraded) shape.v = 1;
    const auto p = sample_scheme(shape, 7, 0);
    const auto scheme = make_scheme(shape, p);
    CHECK(params_of(scheme) == p);
    const auto back = shape_of(scheme, ch);
    CHECK(back.kind == k);
    CHECK(back.q == shape.q);
  }
  CHECK_THROWS_AS(make_scheme(s, SchemeParams(3, 0.5)), Error);
}

TEST_CASE("grid enumeration") {
  SchemeShape s{SchemeKind::OneSet, 1, 1, 1, 2, 2};
  SchemeGrid g(s, 3);
  CHECK(g.count() == 9);
  std::set<SchemeParams> seen;
  for (std::uint64_t i = 0; i < g.count(); ++i) {
    const auto p = g.at(i);
    REQUIRE(rows_are_distributions(s, p));
    for (double x : p) CHECK((x == 0.0 || x == 0.5 || x == 1.0));
    seen.insert(p);
  }
  CHECK(seen.size() == 9);
  CHECK_THROWS_AS(g.at(9), Error);

  SchemeShape big{SchemeKind::TwoSet, 4, 4, 4, 4, 4};
  try {
    SchemeGrid huge(big, 20);
    FAIL("expected GridTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridTooLarge);
  }
}

TEST_CASE("random sampling is seeded per index and flat") {
  SchemeShape s{SchemeKind::OneSet, 2, 3, 1, 2, 2};
  CHECK(sample_scheme(s, 5, 17) == sample_scheme(s, 5, 17));
  CHECK(sample_scheme(s, 5, 17) != sample_scheme(s, 6, 17));
  const auto batch = sample_schemes_random(s, 50, 5);
  CHECK(batch[17] == sample_scheme(s, 5, 17));

  SchemeShape one{SchemeKind::Degraded, 1, 1, 1, 3, 1};  // q_x2 = [1], x1 row of 3
  std::vector<double> mean(3, 0.0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto p = sample_scheme(one, 1, static_cast<std::uint64_t>(i));
    REQUIRE(rows_are_distributions(one, p));
    for (int k = 0; k < 3; ++k) mean[k] += p[1 + k] / n;
  }
  for (double m : mean) CHECK(m == doctest::Approx(1.0 / 3).epsilon(0.03));
}

TEST_CASE("local refinement") {
  SchemeShape s{SchemeKind::Degraded, 1, 1, 1, 3, 1};
  SearchConfig c;
  const SchemeParams start{1.0, 0.2, 0.3, 0.5};
  CHECK(refine_local([](const SchemeParams&) { return 1.0; }, s, start, c) == start);

  const std::vector<double> target{0.1, 0.6, 0.3};
  auto f = [&](const SchemeParams& p) {
    double v = 0.0;
    for (int k = 0; k < 3; ++k) v -= (p[1 + k] - target[k]) * (p[1 + k] - target[k]);
    return v;
  };
  const auto best = refine_local(f, s, start, c);
  CHECK(rows_are_distributions(s, best));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(best[1 + k] - target[k]) < 1e-3);
}

TEST_CASE("strategy selection") {
  SearchConfig c;
  SchemeShape small{SchemeKind::OneSet, 2, 2, 1, 2, 2};
  c.q = 2;
  c.u = 2;
  CHECK(resolve_strategy(c, small) == Strategy::Grid);
  c.u = 3;
  CHECK(resolve_strategy(c, small) == Strategy::RandomRefine);
  c.strategy = Strategy::Random;
  CHECK(resolve_strategy(c, small) == Strategy::Random);
  CHECK(parse_strategy("random+refine") == Strategy::RandomRefine);
  CHECK_THROWS_AS(parse_strategy("annealing"), Error);
  CHECK(parse_bound("secrecy2") == BoundKind::SecrecyTwoSet);
  CHECK_THROWS_AS(parse_bound("inner3"), Error);
}

TEST_CASE("secrecy capacity search on fixtures") {
  SUBCASE("clean MAC reaches one bit") {
    const auto r = maximize_secrecy_capacity(examples::clean_mac(), 0.0, small_config());
    CHECK(r.strategy == Strategy::RandomRefine);
    CHECK(r.value >= 0.99);
    CHECK(r.value <= 1.0 + 1e-9);
    CHECK(secrecy_capacity_value(std::get<SchemeOneSet>(r.witness), examples::clean_mac(), 0.0) == r.value);
  }
  SUBCASE("leaky MAC is exactly zero everywhere") {
    auto c = small_config();
    c.strategy = Strategy::Grid;
    c.q = 1;
    c.u = 2;
    c.grid_resolution = 4;
    const auto r = maximize_secrecy_capacity(examples::leaky_mac(), 0.0, c);
    CHECK(r.evaluated == r.visited.size());
    for (double v : r.visited) REQUIRE(v == 0.0);
    CHECK(r.value == 0.0);
  }
  SUBCASE("binary degraded approaches the closed form") {
    const double expected = h2(0.18) - h2(0.1);
    const auto r =
        maximize_secrecy_capacity(examples::binary_degraded(0.1, 0.1), 0.0, small_config(), SecrecyVariant::Degraded);
    CHECK(r.value >= expected - 0.02);
    CHECK(r.value <= expected + 1e-9);
  }
  SUBCASE("deterministic under the same seed and independent of jobs") {
    auto c = small_config();
    const auto a = maximize_secrecy_capacity(examples::binary_degraded(), 0.1, c);
    c.jobs = 3;
    const auto b = maximize_secrecy_capacity(examples::binary_degraded(), 0.1, c);
    CHECK(a.value == b.value);
    CHECK(a.params == b.params);
    CHECK(a.visited == b.visited);
  }
  CHECK_THROWS_AS(maximize_secrecy_capacity(examples::clean_mac(), -1.0, small_config()), Error);
}

TEST_CASE("assembled regions") {
  const auto ch = examples::binary_leaky_gmac();
  auto c = small_config();
  c.strategy = Strategy::Random;
  c.sample_count = 60;
  for (BoundKind b : {BoundKind::InnerOneSet, BoundKind::OuterOneSet, BoundKind::SecrecyOneSet, BoundKind::Degraded,
                      BoundKind::TwoSet, BoundKind::SecrecyTwoSet}) {
    CAPTURE(bound_name(b));
    const auto r = assemble_region(ch, b, c);
    REQUIRE(r.region.convexified());
    CHECK(r.region.coords == bound_coords(b));
    CHECK(r.evaluated == 60);

    // Pruning keeps the union's support.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
      std::vector<double> dir(r.region.coords.size());
      for (auto& x : dir) x = unit(rng);
      double best = -INFINITY;
      for (const auto& p : r.schemes) {
        const auto reg = scheme_region(b, make_scheme(r.shape, p), ch);
        if (!reg.pieces.empty()) best = std::max(best, support(reg, dir));
      }
      CHECK(support(r.region, dir) == doctest::Approx(best).epsilon(1e-9));
    }
    for (std::size_t h = 0; h < r.region.hull_sources.size(); ++h) {
      const auto& w = r.witness_for_hull_point(h);
      CHECK(contains(scheme_region(b, make_scheme(r.shape, w), ch), (*r.region.hull_points)[h], 1e-9));
    }
  }
}

TEST_CASE("region search is monotone in the sample set and deterministic") {
  const auto ch = examples::binary_leaky_gmac();
  auto c = small_config();
  c.strategy = Strategy::Random;
  c.sample_count = 40;
  const auto small = assemble_region(ch, BoundKind::InnerOneSet, c);
  c.sample_count = 120;
  const auto large = assemble_region(ch, BoundKind::InnerOneSet, c);
  c.jobs = 4;
  const auto large_again = assemble_region(ch, BoundKind::InnerOneSet, c);
  CHECK(*large.region.hull_points == *large_again.region.hull_points);
  for (const auto& dir : std::vector<std::vector<double>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0.3, 1, 0.2}}) {
    CHECK(support(large.region, dir) >= support(small.region, dir) - 1e-12);
  }
  for (const auto& p : *small.region.hull_points) CHECK(contains(large.region, p, 1e-9));
}

TEST_CASE("refined clean-MAC secrecy region") {
  auto c = small_config();
  c.sample_count = 200;
  const auto r = assemble_region(examples::clean_mac(), BoundKind::SecrecyOneSet, c);
  CHECK(r.strategy == Strategy::RandomRefine);
  CHECK(r.evaluated > 200);
  CHECK(support(r.region, {0, 1}) >= 0.99);
  CHECK(support(r.region, {1, 1}) >= 1.98);
  CHECK(support(r.region, {0, 1}) <= 1.0 + 1e-9);
  CHECK(support(r.region, {1, 1}) <= 2.0 + 1e-9);
}

TEST_CASE("degraded region warns on a non-degraded channel") {
  auto c = small_config();
  c.strategy = Strategy::Random;
  c.sample_count = 10;
  ProbMatrix dest(4, 2), eve(4, 2);
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      dest(x1 * 2 + x2, x1 ^ x2) = 0.7;
      dest(x1 * 2 + x2, 1 - (x1 ^ x2)) = 0.3;
      eve(x1 * 2 + x2, x1) = 1.0;
    }
  const auto ch = product_channel(2, 2, dest, ProbMatrix(4, 1, 1.0), eve);
  const auto r = assemble_region(ch, BoundKind::Degraded, c);
  bool warned = false;
  for (const auto& w : r.region.warnings) warned |= w.rfind("NotDegradedWarning", 0) == 0;
  CHECK(warned);
}
