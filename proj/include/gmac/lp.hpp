#pragma once

#include <cstddef>
#include <vector>

// Dense two-phase primal simplex for the small linear programs that show up
// throughout the library: piece supports, hull column generation and the
// degradedness feasibility problems.
//
//   maximize    c.x
//   subject to  A_le x <= b_le
//               A_eq x  = b_eq
//               x >= 0
namespace gmac::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Problem {
  explicit Problem(std::size_t num_vars = 0)
      : num_vars(num_vars), objective(num_vars, 0.0) {}

  std::size_t num_vars;
  std::vector<double> objective;
  std::vector<std::vector<double>> le_rows;
  std::vector<double> le_rhs;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;

  void add_le(std::vector<double> row, double rhs);
  void add_eq(std::vector<double> row, double rhs);
};

struct Options {
  std::size_t max_iterations = 100000;
  double pivot_tolerance = 1e-11;
  double optimality_tolerance = 1e-11;
  double feasibility_tolerance = 1e-9;
};

struct Solution {
  Status status = Status::Infeasible;
  double value = 0.0;
  std::vector<double> x;
  // Row duals in the sign convention of the original rows: le duals are >= 0
  // and c_j - (le_duals . A_le[:,j] + eq_duals . A_eq[:,j]) <= 0 at optimum.
  std::vector<double> le_duals;
  std::vector<double> eq_duals;
  std::size_t iterations = 0;
};

// Throws gmac::Error(SolverStall) when the iteration budget is exhausted.
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace gmac::lp
