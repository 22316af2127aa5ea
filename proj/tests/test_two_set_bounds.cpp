#include "doctest.h"

#include <cmath>

#include "gmac/error.hpp"
#include "gmac/examples.hpp"
#include "gmac/two_set_bounds.hpp"
#include "test_support.hpp"

using namespace gmac;
using namespace gmac::testing;

namespace {

SchemeTwoSet uniform_identity_two_set() {
  SchemeTwoSet s;
  s.q = {1.0};
  s.u_given_q = ProbMatrix(1, 2, {0.5, 0.5});
  s.x1_given_u = ProbMatrix::identity(2);
  s.v_given_q = ProbMatrix(1, 2, {0.5, 0.5});
  s.x2_given_v = ProbMatrix::identity(2);
  return s;
}

// Exchanges the roles of the two users in a channel.
ChannelSpec swap_users(const ChannelSpec& ch) {
  const auto& s = ch.sizes();
  AlphabetSizes t{s.x2, s.x1, s.y, s.y2, s.y1};
  std::vector<double> raw(t.total());
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y = 0; y < s.y; ++y)
        for (std::size_t y1 = 0; y1 < s.y1; ++y1)
          for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
            raw[(((x2 * t.x2 + x1) * t.y + y) * t.y1 + y2) * t.y2 + y1] = ch.p(x1, x2, y, y1, y2);
          }
  return validate_channel(raw, t);
}

}  // namespace

TEST_CASE("two-set: clean MAC polytope") {
  const auto p = mac_polytope(uniform_identity_two_set(), examples::clean_mac());
  REQUIRE(p.inequalities.size() == 4);
  CHECK(p.inequalities[0].bound == doctest::Approx(1));
  CHECK(p.inequalities[1].bound == doctest::Approx(1));
  CHECK(p.inequalities[2].bound == doctest::Approx(2));
  CHECK(p.inequalities[3].bound == doctest::Approx(2));
}

TEST_CASE("two-set: deterministic inputs give only the origin") {
  SchemeTwoSet s = uniform_identity_two_set();
  s.u_given_q = ProbMatrix(1, 2, {1.0, 0.0});
  s.v_given_q = ProbMatrix(1, 2, {0.0, 1.0});
  const auto t = two_set_terms(s, examples::clean_mac());
  CHECK(t.i0 == doctest::Approx(0).scale(1));
  const auto r = two_set_region(t);
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<double> dir(5, 0.0);
    dir[k] = 1.0;
    CHECK(support(r, dir) == doctest::Approx(0).scale(1));
  }
}

TEST_CASE("two-set: zero rates give the origin only") {
  std::mt19937_64 rng(41);
  const auto ch = random_channel(rng, {2, 2, 2, 2, 2});
  const auto r = equivocation_set_explicit(random_two_set(rng, 2, 2, 2, 2, 2), ch, 0, 0, 0);
  CHECK(support(r, {1, 0}) == doctest::Approx(0).scale(1));
  CHECK(support(r, {0, 1}) == doctest::Approx(0).scale(1));
  CHECK_THROWS_AS(equivocation_set_explicit(two_set_terms(random_two_set(rng, 1, 2, 2, 2, 2), ch), -1, 0, 0), Error);
}

TEST_CASE("two-set: blind users see a rectangle") {
  const auto t = two_set_terms(uniform_identity_two_set(), examples::clean_mac());
  CHECK(t.e1 == doctest::Approx(0).scale(1));
  CHECK(t.e2 == doctest::Approx(0).scale(1));
  const auto r = equivocation_set_explicit(t, 0.2, 0.6, 0.9);
  CHECK(contains(r, {0.6, 0.9}));
  CHECK_FALSE(contains(r, {0.61, 0.9}));
  const auto cloud = equivocation_set_oracle(t, 0.2, 0.6, 0.9, 0.01);
  CHECK(down_closed_hausdorff(cloud, r, 1e-3) <= 0.01 + 1e-9);
}

TEST_CASE("two-set: R1 = 0 puts the oracle on the R2e axis") {
  std::mt19937_64 rng(43);
  const auto ch = random_channel(rng, {2, 2, 2, 2, 2});
  const auto t = two_set_terms(random_two_set(rng, 2, 2, 2, 2, 2), ch);
  const auto cloud = equivocation_set_oracle(t, 0.0, 0.0, 0.01);
  for (const auto& p : cloud) CHECK(p[0] == 0.0);
}

TEST_CASE("two-set: oracle and explicit form agree on random binary schemes") {
  std::mt19937_64 rng(47);
  std::size_t compared = 0;
  const auto ch = examples::binary_leaky_gmac();
  for (int trial = 0; trial < 3; ++trial) {
    const auto t = two_set_terms(random_two_set(rng, 2, 2, 2, 2, 2, 0.3), ch);
    const auto mac = mac_polytope(t);
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b <= 10; ++b)
        for (int c = 0; c <= 10; ++c) {
          const double r0 = 0.1 * a, r1 = 0.1 * b, r2 = 0.1 * c;
          if (!mac.satisfies({r0, r1, r2}, 0.0)) continue;
          const auto cloud = equivocation_set_oracle(t, r0, r1, r2, 0.01);
          REQUIRE_FALSE(cloud.empty());
          const auto region = equivocation_set_explicit(t, r0, r1, r2);
          CHECK(down_closed_hausdorff(cloud, region, 1e-3) <= 0.01 + 1e-9);
          ++compared;
        }
  }
  CHECK(compared >= 20);
}

TEST_CASE("two-set: unrestricted union would exceed the explicit form") {
  // Blind users, R2 large: the explicit form caps R1e by I12 - R2; dropping
  // R2' >= R2 from the union would allow R1e up to I1.
  const auto t = two_set_terms(uniform_identity_two_set(), examples::clean_mac());
  const auto r = equivocation_set_explicit(t, 0.0, 1.0, 1.0);
  CHECK(support(r, {1, 0}) == doctest::Approx(1.0));
  const auto r2 = equivocation_set_explicit(t, 0.5, 1.0, 1.0);
  CHECK(support(r2, {1, 0}) == doctest::Approx(0.5));
}

TEST_CASE("two-set: region projection and slices") {
  std::mt19937_64 rng(53);
  const auto ch = examples::binary_leaky_gmac();
  const auto t = two_set_terms(random_two_set(rng, 2, 2, 2, 2, 2, 0.3), ch);
  const auto region = two_set_region(t);
  CHECK(region.pieces.size() <= 12);
  const auto mac = mac_polytope(t);

  // R1e = R2e = 0 slice has the MAC polytope's support.
  auto zero_slice = fix_coordinates(region, {{"R1e", 0.0}, {"R2e", 0.0}});
  RateRegion mac_region;
  mac_region.add(mac);
  for (const auto& dir : std::vector<std::vector<double>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0.3, 1, 0.5}}) {
    std::vector<double> d5{dir[0], dir[1], dir[2], 0, 0};
    CHECK(support(zero_slice, d5) == doctest::Approx(support(mac_region, dir)).epsilon(1e-9));
  }

  // Slices at fixed achievable (R0,R1,R2) match the explicit set on a grid.
  for (const auto& rates : std::vector<std::array<double, 3>>{{0.0, 0.1, 0.1}, {0.05, 0.2, 0.05}, {0.1, 0.02, 0.15}}) {
    if (!mac.satisfies({rates[0], rates[1], rates[2]}, 0.0)) continue;
    const auto ex = equivocation_set_explicit(t, rates[0], rates[1], rates[2]);
    for (int i = 0; i <= 30; ++i)
      for (int j = 0; j <= 30; ++j) {
        const double x = 0.01 * i, y = 0.01 * j;
        CHECK(contains(region, {rates[0], rates[1], rates[2], x, y}, 1e-12) == contains(ex, {x, y}, 1e-12));
      }
  }
}

TEST_CASE("two-set: secrecy inner pieces") {
  const auto blind = two_set_terms(uniform_identity_two_set(), examples::clean_mac());
  const auto sr = secrecy_inner_region(blind);
  REQUIRE(sr.pieces.size() == 3);
  const auto mac = mac_polytope(blind);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(sr.pieces[0].inequalities[k].bound == doctest::Approx(mac.inequalities[k].bound));
  }

  const auto leak = two_set_terms(uniform_identity_two_set(), examples::leaky_mac());
  const auto lr = secrecy_inner_region(leak);
  for (std::size_t k = 0; k < lr.pieces.size(); ++k) {
    if (lr.provenance[k] != 3) CHECK(support(lr.pieces[k], {0, 1, 0}) == doctest::Approx(0).scale(1));
  }

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ch = random_channel(rng, {2, 2, 2, 2, 2});
    const auto t = two_set_terms(random_two_set(rng, 2, 2, 2, 2, 2), ch);
    const auto full = two_set_region(t);
    for (const auto& piece : secrecy_inner_region(t).pieces) {
      for (const auto& v : vertices(piece)) CHECK(contains(full, {v[0], v[1], v[2], v[1], v[2]}, 1e-9));
    }
  }
}

TEST_CASE("two-set: swapping the users swaps the layers") {
  std::mt19937_64 rng(61);
  const auto ch = random_channel(rng, {2, 3, 4, 2, 2}, 0.2);
  const auto s = random_two_set(rng, 2, 2, 3, 2, 3, 0.2);
  SchemeTwoSet w{s.q, s.v_given_q, s.x2_given_v, s.u_given_q, s.x1_given_u};
  const auto t = two_set_terms(s, ch);
  const auto u = two_set_terms(w, swap_users(ch));
  CHECK(u.i1 == doctest::Approx(t.i2).epsilon(1e-12));
  CHECK(u.i2 == doctest::Approx(t.i1).epsilon(1e-12));
  CHECK(u.e1 == doctest::Approx(t.e2).epsilon(1e-12));
  CHECK(u.e2 == doctest::Approx(t.e1).epsilon(1e-12));
  const auto a = secrecy_inner_region(t), b = secrecy_inner_region(u);
  CHECK(support(a, {0.2, 1, 0.1}) == doctest::Approx(support(b, {0.2, 0.1, 1})).epsilon(1e-12));
  const auto ea = equivocation_set_explicit(t, 0.01, 0.1, 0.2), eb = equivocation_set_explicit(u, 0.01, 0.2, 0.1);
  CHECK(support(ea, {1, 0.3}) == doctest::Approx(support(eb, {0.3, 1})).epsilon(1e-12));
}

TEST_CASE("two-set: equivocation trade-off is monotone") {
  const auto t = two_set_terms(uniform_identity_two_set(), examples::binary_degraded());
  const auto r = equivocation_set_explicit(t, 0.0, 1.0, 1.0);
  double prev = INFINITY;
  for (int i = 0; i <= 20; ++i) {
    const double x = 0.01 * i;
    double best = -1;
    for (const auto& p : r.pieces) {
      auto q = p;
      q.eq({1, 0}, x);
      best = std::max(best, support(q, {0, 1}));
    }
    if (best < 0) break;
    CHECK(best <= prev + 1e-12);
    prev = best;
  }
}
