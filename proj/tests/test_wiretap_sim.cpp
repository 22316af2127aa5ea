#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "gmac/error.hpp"
#include "gmac/examples.hpp"
#include "gmac/wiretap_sim.hpp"
#include "test_support.hpp"

using namespace gmac;
using namespace gmac::testing;

namespace {

const InputDistribution kUniform{{0.5, 0.5}, {0.5, 0.5}};

// Bits of `value`, most significant first.
std::vector<std::uint32_t> bits(std::size_t value, std::size_t n) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = static_cast<std::uint32_t>((value >> (n - 1 - t)) & 1u);
  return out;
}

std::vector<std::uint32_t> enumerate_words(std::size_t count, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < count; ++w) {
    const auto b = bits(w, n);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

ChannelSpec blind_destination() {
  return product_channel(2, 2, ProbMatrix::uniform(4, 3), ProbMatrix(4, 1, 1.0), ProbMatrix::uniform(4, 2));
}

struct EnvGuard {
  explicit EnvGuard(const char* v) { setenv("GMAC_MAX_STATES", v, 1); }
  ~EnvGuard() { unsetenv("GMAC_MAX_STATES"); }
};

}  // namespace

TEST_CASE("codebook construction") {
  const auto ch = examples::binary_leaky_gmac();
  CodeDimensions d{3, 2, 2, 2, 2, 1};
  const auto a = build_codebook(ch, d, kUniform, 42);
  const auto b = build_codebook(ch, d, kUniform, 42);
  const auto c = build_codebook(ch, d, kUniform, 43);
  CHECK(a.x1_words == b.x1_words);
  CHECK(a.x2_words == b.x2_words);
  CHECK((a.x1_words != c.x1_words || a.x2_words != c.x2_words));
  CHECK(a.x1_words.size() == 2 * 2 * 2 * 3);
  CHECK(a.x2_words.size() == 2 * 2 * 1 * 3);

  SUBCASE("letter frequencies follow the input distribution") {
    CodeDimensions big{1, 100, 100, 100, 1, 1};
    const auto code = build_codebook(ch, big, {{0.3, 0.7}, {0.8, 0.2}}, 5);
    double f1 = 0, f2 = 0;
    for (auto l : code.x1_words) f1 += l;
    for (auto l : code.x2_words) f2 += l;
    CHECK(std::abs(f1 / code.x1_words.size() - 0.7) < 0.02);
    CHECK(std::abs(f2 / code.x2_words.size() - 0.2) < 0.02);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(build_codebook(ch, d, {{0.5, 0.6}, {0.5, 0.5}}, 1), Error);
    CHECK_THROWS_AS(build_codebook(ch, d, {{1.0}, {0.5, 0.5}}, 1), Error);
    CHECK_THROWS_AS(build_codebook(ch, CodeDimensions{0, 1, 1, 1, 1, 1}, kUniform, 1), Error);
    CHECK_THROWS_AS(make_codebook(ch, CodeDimensions{1, 1, 2, 1, 1, 1}, {0, 2}, {0}), Error);
    CHECK_THROWS_AS(make_codebook(ch, CodeDimensions{1, 1, 2, 1, 1, 1}, {0}, {0}), Error);
  }
  SUBCASE("enumeration guard") {
    try {
      build_codebook(ch, CodeDimensions{12, 4, 4, 4, 2, 2}, kUniform, 1);
      FAIL("expected EnumerationTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EnumerationTooLarge);
    }
    EnvGuard env("100");
    CHECK(max_enumeration_states() == 100);
    CHECK_THROWS_AS(build_codebook(ch, CodeDimensions{3, 1, 2, 2, 1, 1}, kUniform, 1), Error);
    CHECK_NOTHROW(build_codebook(ch, CodeDimensions{2, 1, 2, 2, 1, 1}, kUniform, 1));
  }
}

TEST_CASE("error probability") {
  SUBCASE("noiseless destination with injective encoding decodes perfectly") {
    const auto ch = examples::clean_mac();
    CodeDimensions d{2, 1, 4, 4, 1, 1};
    const auto code = make_codebook(ch, d, enumerate_words(4, 2), enumerate_words(4, 2));
    const auto r = exact_error_probability_detailed(code, ch);
    CHECK(r.value == 0.0);
    CHECK(std::abs(r.mass - 1.0) < 1e-9);
  }
  SUBCASE("blind destination guesses") {
    const auto ch = blind_destination();
    for (auto [m0, m1, m2] : std::vector<std::array<std::size_t, 3>>{{1, 2, 2}, {2, 2, 1}, {1, 3, 1}, {2, 2, 2}}) {
      const auto code = build_codebook(ch, CodeDimensions{2, m0, m1, m2, 2, 1}, kUniform, 9);
      const double m = static_cast<double>(m0 * m1 * m2);
      CHECK(exact_error_probability(code, ch) == doctest::Approx(1.0 - 1.0 / m).epsilon(1e-12));
    }
  }
  SUBCASE("repetition code over a binary symmetric channel") {
    const double p = 0.1;
    const auto ch = examples::binary_wiretap(p, 0.5);
    const auto code = make_codebook(ch, CodeDimensions{3, 1, 2, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {0, 0, 0});
    const double expected = 3 * p * p * (1 - p) + p * p * p;
    CHECK(exact_error_probability(code, ch) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("equivocation") {
  SUBCASE("pure-noise wiretapper learns nothing") {
    const auto ch = examples::binary_pure_noise_wiretap();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto code = build_codebook(ch, CodeDimensions{4, 1, 4, 1, 2, 1}, kUniform, seed);
      const auto r = exact_equivocation_detailed(code, ch, EquivocationTarget::User2AboutW1);
      CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(std::abs(r.mass - 1.0) < 1e-9);
    }
  }
  SUBCASE("a single message has nothing to hide") {
    const auto ch = examples::binary_leaky_gmac();
    const auto code = build_codebook(ch, CodeDimensions{3, 2, 1, 2, 1, 2}, kUniform, 3);
    CHECK(exact_equivocation(code, ch, EquivocationTarget::User2AboutW1) == 0.0);
  }
  SUBCASE("noiseless wiretapper inverts an injective codebook") {
    const auto ch = examples::leaky_mac();
    const auto code = make_codebook(ch, CodeDimensions{2, 1, 4, 2, 1, 1}, enumerate_words(4, 2),
                                    std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(exact_equivocation(code, ch, EquivocationTarget::User2AboutW1) == doctest::Approx(0.0).scale(1.0));
    CHECK(exact_equivocation(code, ch, EquivocationTarget::User1AboutW2) == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("bounds and output relabeling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const auto ch = random_channel(rng, {2, 2, 2, 2, 3}, 0.5);
      const CodeDimensions d{3, 2, 3, 2, 2, 2};
      const auto code = build_codebook(ch, d, kUniform, static_cast<std::uint64_t>(trial));
      const double e2 = exact_equivocation(code, ch, EquivocationTarget::User2AboutW1);
      const double e1 = exact_equivocation(code, ch, EquivocationTarget::User1AboutW2);
      CHECK(e2 >= 0.0);
      CHECK(e2 <= std::log2(3.0) / 3 + 1e-12);
      CHECK(e1 >= 0.0);
      CHECK(e1 <= std::log2(2.0) / 3 + 1e-12);

      const auto& s = ch.sizes();
      std::vector<double> raw(s.total());
      for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2)
          for (std::size_t y = 0; y < s.y; ++y)
            for (std::size_t y1 = 0; y1 < s.y1; ++y1)
              for (std::size_t y2 = 0; y2 < s.y2; ++y2)
                raw[ch.index(x1, x2, y, y1, (y2 + 1) % s.y2)] = ch.p(x1, x2, y, y1, y2);
      const auto relabeled = validate_channel(raw, s);
      CHECK(exact_equivocation(code, relabeled, EquivocationTarget::User2AboutW1) ==
            doctest::Approx(e2).epsilon(1e-12));
    }
  }
  SUBCASE("degradation never helps the wiretapper") {
    for (double pw : {0.0, 0.05, 0.2, 0.5}) {
      const auto ch = examples::binary_degraded(0.1, pw);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto code = build_codebook(ch, CodeDimensions{4, 2, 4, 1, 2, 1}, {{0.5, 0.5}, {1.0, 0.0}}, seed);
        CHECK(exact_equivocation(code, ch, EquivocationTarget::User2AboutW1) >=
              exact_destination_equivocation(code, ch) - 1e-12);
      }
    }
  }
}

TEST_CASE("simulation") {
  SUBCASE("pure-noise wiretapper: equivocation equals the rate") {
    const CodeDimensions d{3, 2, 4, 2, 1, 1};
    const auto s = simulate(examples::binary_pure_noise_wiretap(), d, kUniform, {1, 2, 3}, 1);
    REQUIRE(s.reports.size() == 3);
    for (const auto& r : s.reports) {
      CHECK(r.equivocation_user2 == doctest::Approx(r.rates[1]).epsilon(1e-12));
      CHECK(r.error_probability >= 0.0);
      CHECK(r.error_probability <= 1.0);
      CHECK(std::abs(r.mass - 1.0) < 1e-9);
    }
  }
  SUBCASE("perfect code on the clean MAC") {
    const auto ch = examples::clean_mac();
    const auto code = make_codebook(ch, CodeDimensions{2, 1, 4, 4, 1, 1}, enumerate_words(4, 2), enumerate_words(4, 2));
    CHECK(exact_error_probability(code, ch) == 0.0);
    CHECK(exact_equivocation(code, ch, EquivocationTarget::User2AboutW1) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("more bin randomization hides more") {
    const auto ch = examples::binary_wiretap(0.05, 0.2);
    std::vector<std::uint64_t> seeds(20);
    std::iota(seeds.begin(), seeds.end(), 100);
    double prev = -1.0;
    for (std::size_t j1 : {1, 2, 4}) {
      const auto s = simulate(ch, CodeDimensions{4, 1, 2, 1, j1, 1}, {{0.5, 0.5}, {1.0}}, seeds, 1);
      CAPTURE(j1);
      CHECK(s.mean_equivocation_user2 >= prev);
      prev = s.mean_equivocation_user2;
    }
  }
  SUBCASE("deterministic across job counts") {
    const auto ch = examples::binary_leaky_gmac();
    const CodeDimensions d{3, 1, 2, 2, 2, 2};
    const auto a = simulate(ch, d, kUniform, {4, 5, 6, 7}, 1);
    const auto b = simulate(ch, d, kUniform, {4, 5, 6, 7}, 3);
    CHECK(a.mean_equivocation_user2 == b.mean_equivocation_user2);
    CHECK(a.mean_error_probability == b.mean_error_probability);
    CHECK(a.mean_equivocation_user1 == b.mean_equivocation_user1);
  }
  CHECK_THROWS_AS(simulate(examples::clean_mac(), CodeDimensions{}, kUniform, {}), Error);
}
