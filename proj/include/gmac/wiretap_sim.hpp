#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gmac/channel.hpp"

// Exact finite-blocklength evaluation of random binning codes by enumeration.
namespace gmac {

inline constexpr std::uint64_t kDefaultMaxStates = 10'000'000;

// 10^7 unless GMAC_MAX_STATES holds a positive integer.
std::uint64_t max_enumeration_states();

struct CodeDimensions {
  std::size_t n = 1;
  std::size_t m0 = 1, m1 = 1, m2 = 1;
  std::size_t j1 = 1, j2 = 1;  // bin sizes (encoder randomization)

  std::array<double, 3> rates() const;  // log2(M_i) / n
  void validate() const;
};

struct InputDistribution {
  std::vector<double> x1;
  std::vector<double> x2;
};

struct Codebook {
  CodeDimensions dims;
  std::size_t x1_size = 2, x2_size = 2;
  // Letters of user 1's codeword for (w0, w1, j1) start at
  // (((w0 * M1 + w1) * J1 + j1) * n); user 2 likewise with (w0, w2, j2).
  std::vector<std::uint32_t> x1_words;
  std::vector<std::uint32_t> x2_words;
  std::uint64_t seed = 0;

  std::span<const std::uint32_t> x1(std::size_t w0, std::size_t w1, std::size_t j1) const;
  std::span<const std::uint32_t> x2(std::size_t w0, std::size_t w2, std::size_t j2) const;
  void validate(const ChannelSpec& channel) const;
};

// Validated codebook from explicit maps (seed recorded as 0).
Codebook make_codebook(const ChannelSpec& channel, const CodeDimensions& dims, std::vector<std::uint32_t> x1_words,
                       std::vector<std::uint32_t> x2_words);

// Every letter drawn independently from the per-user input distribution.
// Throws EnumerationTooLarge when |X1|^n |X2|^n M0 M1 M2 J1 J2 exceeds the guard.
Codebook build_codebook(const ChannelSpec& channel, const CodeDimensions& dims, const InputDistribution& input,
                        std::uint64_t seed);

struct ExactValue {
  double value = 0.0;
  double mass = 0.0;  // total enumerated probability
};

// Average block error of the ML decoder for (w0, w1, w2) at the destination,
// messages and bins uniform.
ExactValue exact_error_probability_detailed(const Codebook& code, const ChannelSpec& channel);
double exact_error_probability(const Codebook& code, const ChannelSpec& channel);

enum class EquivocationTarget { User2AboutW1, User1AboutW2 };

// (1/n) H(W1 | Y2^n, X2^n, W0, W2) or (1/n) H(W2 | Y1^n, X1^n, W0, W1).
ExactValue exact_equivocation_detailed(const Codebook& code, const ChannelSpec& channel, EquivocationTarget target);
double exact_equivocation(const Codebook& code, const ChannelSpec& channel, EquivocationTarget target);

// (1/n) H(W1 | Y^n, X2^n, W0, W2): the user-2 quantity with the destination
// output in place of Y2.
double exact_destination_equivocation(const Codebook& code, const ChannelSpec& channel);

struct SimReport {
  std::uint64_t seed = 0;
  double error_probability = 0.0;
  double equivocation_user2 = 0.0;
  double equivocation_user1 = 0.0;
  std::array<double, 3> rates{};
  double mass = 0.0;
};

struct SimSummary {
  std::vector<SimReport> reports;  // one per seed, in seed order
  double mean_error_probability = 0.0;
  double mean_equivocation_user2 = 0.0;
  double mean_equivocation_user1 = 0.0;
};

SimSummary simulate(const ChannelSpec& channel, const CodeDimensions& dims, const InputDistribution& input,
                    const std::vector<std::uint64_t>& seeds, std::size_t jobs = 0);

}  // namespace gmac
