#include "gmac/examples.hpp"

namespace gmac::examples {

namespace {

ProbMatrix bsc(double p) { return ProbMatrix::from_rows({{1 - p, p}, {p, 1 - p}}); }

// Deterministic outputs given (x1, x2) in a 2x2 input alphabet.
template <typename Fy, typename Fy1, typename Fy2>
ChannelSpec deterministic(AlphabetSizes s, Fy fy, Fy1 fy1, Fy2 fy2) {
  std::vector<double> raw(s.total(), 0.0);
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
      const std::size_t block = x1 * s.x2 + x2;
      const std::size_t out = (fy(x1, x2) * s.y1 + fy1(x1, x2)) * s.y2 + fy2(x1, x2);
      raw[block * s.outputs() + out] = 1.0;
    }
  return validate_channel(std::move(raw), s);
}

auto pair_out = [](std::size_t x1, std::size_t x2) { return 2 * x1 + x2; };
auto zero_out = [](std::size_t, std::size_t) { return std::size_t{0}; };

ProbMatrix xor_noise(double p) {
  ProbMatrix m(4, 2);
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      const std::size_t clean = x1 ^ x2;
      m(x1 * 2 + x2, clean) = 1 - p;
      m(x1 * 2 + x2, 1 - clean) = p;
    }
  return m;
}

}  // namespace

ChannelSpec clean_mac() { return deterministic({2, 2, 4, 1, 1}, pair_out, zero_out, zero_out); }

ChannelSpec eavesdropper_copy() { return deterministic({2, 2, 4, 1, 4}, pair_out, zero_out, pair_out); }

ChannelSpec leaky_mac() {
  return deterministic(
      {2, 2, 4, 2, 2}, pair_out, [](std::size_t, std::size_t x2) { return x2; },
      [](std::size_t x1, std::size_t) { return x1; });
}

ChannelSpec binary_degraded(double p_main, double p_wiretap) {
  ProbMatrix deg(4, 2);
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      deg(y * 2 + x2, y) = 1 - p_wiretap;
      deg(y * 2 + x2, 1 - y) = p_wiretap;
    }
  return compose_degraded_channel(2, 2, xor_noise(p_main), deg);
}

ChannelSpec binary_pure_noise_wiretap(double p_main) {
  return product_channel(2, 2, xor_noise(p_main), ProbMatrix(4, 1, 1.0), ProbMatrix::uniform(4, 2));
}

ChannelSpec binary_wiretap(double p_main, double p_wiretap) {
  return product_channel(2, 1, bsc(p_main), ProbMatrix(2, 1, 1.0), bsc(p_wiretap));
}

ChannelSpec independent_wiretap_copy(double p, double q) {
  return product_channel(2, 1, bsc(p), ProbMatrix(2, 1, 1.0), bsc(p * (1 - q) + (1 - p) * q));
}

ChannelSpec binary_leaky_gmac(double p_main, double p_leak) {
  ProbMatrix to_user1(4, 2), to_user2(4, 2);
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      to_user1(x1 * 2 + x2, x2) = 1 - p_leak;
      to_user1(x1 * 2 + x2, 1 - x2) = p_leak;
      to_user2(x1 * 2 + x2, x1) = 1 - p_leak;
      to_user2(x1 * 2 + x2, 1 - x1) = p_leak;
    }
  return product_channel(2, 2, xor_noise(p_main), to_user1, to_user2);
}

ChannelSpec noiseless_wiretapper(double p_main) {
  ProbMatrix to_user2(4, 2);
  for (std::size_t x1 = 0; x1 < 2; ++x1)
    for (std::size_t x2 = 0; x2 < 2; ++x2) to_user2(x1 * 2 + x2, x1) = 1.0;
  return product_channel(2, 2, xor_noise(p_main), ProbMatrix(4, 1, 1.0), to_user2);
}

}  // namespace gmac::examples
