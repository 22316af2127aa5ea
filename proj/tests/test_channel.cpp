#include "doctest.h"

#include "gmac/channel.hpp"
#include "gmac/error.hpp"

using namespace gmac;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

ProbMatrix bsc(double p) { return ProbMatrix::from_rows({{1 - p, p}, {p, 1 - p}}); }

// Y = X1 xor X2 xor Bern(0.1), Y2 = Y xor Bern(0.1).
ChannelSpec binary_degraded() {
  ProbMatrix main(4, 2);
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      const std::size_t clean = x1 ^ x2;
      main(x1 * 2 + x2, clean) = 0.9;
      main(x1 * 2 + x2, 1 - clean) = 0.1;
    }
  ProbMatrix deg(4, 2);
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      deg(y * 2 + x2, y) = 0.9;
      deg(y * 2 + x2, 1 - y) = 0.1;
    }
  return compose_degraded_channel(2, 2, main, deg);
}

}  // namespace

TEST_CASE("channel: validation rejects malformed tables") {
  AlphabetSizes s{2, 1, 2, 1, 1};
  CHECK(kind_of([&] { validate_channel({1, 0, 0}, s); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { validate_channel({1.5, -0.5, 0.5, 0.5}, s); }) == ErrorKind::NegativeProbability);
  CHECK(kind_of([&] { validate_channel({0.9, 0.0, 0.5, 0.5}, s); }) == ErrorKind::RowSumViolation);
  CHECK(kind_of([&] { validate_channel({}, AlphabetSizes{0, 1, 1, 1, 1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("channel: tiny row-sum drift is renormalized") {
  AlphabetSizes s{2, 1, 2, 1, 1};
  const auto ch = validate_channel({0.5 + 4e-10, 0.5, 0.25, 0.75}, s);
  CHECK(ch.p(0, 0, 0, 0, 0) + ch.p(0, 0, 1, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("channel: marginal kernels") {
  const auto ch = binary_degraded();
  const auto y = marginal_kernel(ch, Receiver::Destination);
  const auto y2 = marginal_kernel(ch, Receiver::User2);
  CHECK(y(0, 0, 0, 2) == doctest::Approx(0.9));
  CHECK(y2(0, 0, 0, 2) == doctest::Approx(0.82));
  CHECK(y2(1, 0, 1, 2) == doctest::Approx(0.82));
  const auto y1 = marginal_kernel(ch, Receiver::User1);
  CHECK(y1.table.cols == 1);
}

TEST_CASE("channel: physically degraded composition is certified") {
  const auto cert = classify_degradedness(binary_degraded());
  CHECK(cert.verdict == Degradedness::Physically);
  REQUIRE(cert.witness);
  CHECK((*cert.witness)(0, 0) == doctest::Approx(0.9));
  CHECK(cert.residual <= 1e-9);
}

TEST_CASE("channel: independent copy is stochastically but not physically degraded") {
  // Y = X1 through BSC(0.1); Y2 drawn independently from BSC(0.28) = BSC(0.1) * BSC(0.2).
  const ProbMatrix dest = bsc(0.1);
  const ProbMatrix user2 = bsc(0.1 * 0.8 + 0.9 * 0.2);
  const auto ch = product_channel(2, 1, dest, ProbMatrix(2, 1, 1.0), user2);
  CHECK(check_physically_degraded(ch).verdict == Degradedness::NotDegraded);
  const auto cert = classify_degradedness(ch);
  CHECK(cert.verdict == Degradedness::Stochastically);
  REQUIRE(cert.witness);
  CHECK((*cert.witness)(0, 0) == doctest::Approx(0.8).epsilon(1e-6));
}

TEST_CASE("channel: wiretapper better than destination is not degraded") {
  const auto ch = product_channel(2, 1, bsc(0.3), ProbMatrix(2, 1, 1.0), bsc(0.0));
  CHECK(classify_degradedness(ch).verdict == Degradedness::NotDegraded);
}
