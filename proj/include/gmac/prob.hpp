#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gmac {

// Tolerance used when checking that probability rows sum to one.
inline constexpr double kRowSumTolerance = 1e-9;

// Dense row-major matrix of probabilities. Used both for conditional
// distributions (each row sums to one) and for small joint tables (all
// entries sum to one).
struct ProbMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  ProbMatrix() = default;
  ProbMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  ProbMatrix(std::size_t r, std::size_t c, std::vector<double> values);

  static ProbMatrix identity(std::size_t n);
  static ProbMatrix uniform(std::size_t r, std::size_t c);
  static ProbMatrix from_rows(const std::vector<std::vector<double>>& rows);

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
  std::vector<std::vector<double>> to_rows() const;
};

// Throws NegativeProbability / RowSumViolation / DimensionMismatch with the
// given name in the message.
void require_row_stochastic(const ProbMatrix& m, const std::string& name);
void require_joint(const ProbMatrix& m, const std::string& name);
void require_distribution(std::span<const double> p, const std::string& name);

bool is_row_stochastic(const ProbMatrix& m, double tol = kRowSumTolerance);

// Binary entropy in bits.
double binary_entropy(double p);

}  // namespace gmac
