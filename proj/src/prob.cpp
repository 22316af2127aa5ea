#include "gmac/prob.hpp"

#include <cmath>

#include "gmac/error.hpp"

namespace gmac {

ProbMatrix::ProbMatrix(std::size_t r, std::size_t c, std::vector<double> values)
    : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != r * c) {
    fail(ErrorKind::DimensionMismatch, "matrix data does not match its shape");
  }
}

ProbMatrix ProbMatrix::identity(std::size_t n) {
  ProbMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ProbMatrix ProbMatrix::uniform(std::size_t r, std::size_t c) {
  return ProbMatrix(r, c, 1.0 / static_cast<double>(c));
}

ProbMatrix ProbMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(ErrorKind::DimensionMismatch, "matrix needs at least one row");
  ProbMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<double>> ProbMatrix::to_rows() const {
  std::vector<std::vector<double>> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

namespace {

void require_nonnegative(std::span<const double> v, const std::string& name) {
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      fail(ErrorKind::NegativeProbability, name + ": entries must be finite and nonnegative");
    }
  }
}

}  // namespace

void require_row_stochastic(const ProbMatrix& m, const std::string& name) {
  if (m.rows == 0 || m.cols == 0 || m.data.size() != m.rows * m.cols) {
    fail(ErrorKind::DimensionMismatch, name + ": empty or malformed table");
  }
  require_nonnegative(m.data, name);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double s = 0.0;
    for (double x : m.row(r)) s += x;
    if (std::abs(s - 1.0) > kRowSumTolerance) {
      fail(ErrorKind::RowSumViolation, name + ": row " + std::to_string(r) + " sums to " +
                                           std::to_string(s));
    }
  }
}

void require_joint(const ProbMatrix& m, const std::string& name) {
  if (m.rows == 0 || m.cols == 0 || m.data.size() != m.rows * m.cols) {
    fail(ErrorKind::DimensionMismatch, name + ": empty or malformed table");
  }
  require_distribution(m.data, name);
}

void require_distribution(std::span<const double> p, const std::string& name) {
  if (p.empty()) fail(ErrorKind::DimensionMismatch, name + ": empty distribution");
  require_nonnegative(p, name);
  double s = 0.0;
  for (double x : p) s += x;
  if (std::abs(s - 1.0) > kRowSumTolerance) {
    fail(ErrorKind::RowSumViolation, name + ": total mass is " + std::to_string(s));
  }
}

bool is_row_stochastic(const ProbMatrix& m, double tol) {
  if (m.rows == 0 || m.cols == 0) return false;
  for (std::size_t r = 0; r < m.rows; ++r) {
    double s = 0.0;
    for (double x : m.row(r)) {
      if (x < 0.0) return false;
      s += x;
    }
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace gmac
