#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gmac/prob.hpp"

namespace gmac {

struct AlphabetSizes {
  std::size_t x1 = 1;
  std::size_t x2 = 1;
  std::size_t y = 1;
  std::size_t y1 = 1;
  std::size_t y2 = 1;

  std::size_t inputs() const { return x1 * x2; }
  std::size_t outputs() const { return y * y1 * y2; }
  std::size_t total() const { return inputs() * outputs(); }
  bool operator==(const AlphabetSizes&) const = default;
};

// Discrete memoryless GMAC: a transition law p(y, y1, y2 | x1, x2) over finite
// alphabets. Immutable once constructed through validate_channel.
class ChannelSpec {
 public:
  const AlphabetSizes& sizes() const { return sizes_; }

  double p(std::size_t x1, std::size_t x2, std::size_t y, std::size_t y1, std::size_t y2) const {
    return prob_[index(x1, x2, y, y1, y2)];
  }
  std::span<const double> table() const { return prob_; }

  std::size_t index(std::size_t x1, std::size_t x2, std::size_t y, std::size_t y1,
                    std::size_t y2) const {
    return (((x1 * sizes_.x2 + x2) * sizes_.y + y) * sizes_.y1 + y1) * sizes_.y2 + y2;
  }

 private:
  friend ChannelSpec validate_channel(std::vector<double> raw, const AlphabetSizes& sizes);
  ChannelSpec(AlphabetSizes sizes, std::vector<double> prob)
      : sizes_(sizes), prob_(std::move(prob)) {}

  AlphabetSizes sizes_;
  std::vector<double> prob_;
};

// Checks shape, sign and per-input normalization. Rows whose sum deviates from
// one by at most 1e-9 are renormalized; larger deviations are rejected.
// `raw` is indexed [x1][x2][y][y1][y2] in row-major order.
ChannelSpec validate_channel(std::vector<double> raw, const AlphabetSizes& sizes);

enum class Receiver { Destination, User1, User2 };
std::string_view receiver_name(Receiver r);

// Conditional law of one receiver's output; rows are indexed x1 * |X2| + x2.
struct MarginalKernel {
  Receiver receiver = Receiver::Destination;
  ProbMatrix table;

  double operator()(std::size_t x1, std::size_t x2, std::size_t out, std::size_t size_x2) const {
    return table(x1 * size_x2 + x2, out);
  }
};

MarginalKernel marginal_kernel(const ChannelSpec& spec, Receiver receiver);

enum class Degradedness { Physically, Stochastically, NotDegraded };
std::string_view degradedness_name(Degradedness d);

// Witness kernel p(y2 | y, x2) has rows indexed y * |X2| + x2.
struct DegradednessCertificate {
  Degradedness verdict = Degradedness::NotDegraded;
  std::optional<ProbMatrix> witness;
  double residual = 0.0;
};

inline constexpr double kDefaultDegradedTolerance = 1e-7;

DegradednessCertificate check_physically_degraded(const ChannelSpec& spec,
                                                  double tol = kDefaultDegradedTolerance);

// Linear feasibility in the unknown kernel p(y2 | y, x2), solved as a
// min-max residual LP per x2. Throws SolverStall if the LP does not finish.
DegradednessCertificate check_stochastically_degraded(const ChannelSpec& spec,
                                                      double tol = kDefaultDegradedTolerance);

// Physical check first, then the stochastic one.
DegradednessCertificate classify_degradedness(const ChannelSpec& spec,
                                              double tol = kDefaultDegradedTolerance);

// prob(x1,x2,y,y1,y2) = main(y|x1,x2) * side(y1|x1,x2) * degrade(y2|y,x2).
// `main` and `side` rows are indexed x1 * |X2| + x2, `degrade` rows y * |X2| + x2.
// Without `side`, Y1 is a constant (|Y1| = 1).
ChannelSpec compose_degraded_channel(std::size_t size_x1, std::size_t size_x2,
                                     const ProbMatrix& main, const ProbMatrix& degrade,
                                     const std::optional<ProbMatrix>& side = std::nullopt);

// Builds a channel whose three outputs are conditionally independent given the
// inputs, each with the given kernel (rows x1 * |X2| + x2).
ChannelSpec product_channel(std::size_t size_x1, std::size_t size_x2, const ProbMatrix& dest,
                            const ProbMatrix& user1, const ProbMatrix& user2);

}  // namespace gmac
