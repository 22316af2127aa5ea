#include "gmac/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gmac/error.hpp"

namespace gmac::lp {

void Problem::add_le(std::vector<double> row, double rhs) {
  if (row.size() != num_vars) {
    fail(ErrorKind::DimensionMismatch, "lp: row width does not match variable count");
  }
  le_rows.push_back(std::move(row));
  le_rhs.push_back(rhs);
}

void Problem::add_eq(std::vector<double> row, double rhs) {
  if (row.size() != num_vars) {
    fail(ErrorKind::DimensionMismatch, "lp: row width does not match variable count");
  }
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

namespace {

enum class RowType { Le, Ge, Eq };

class Tableau {
 public:
  Tableau(const Problem& p, const Options& opt) : opt_(opt) {
    n_ = p.num_vars;
    le_count_ = p.le_rows.size();
    m_ = p.le_rows.size() + p.eq_rows.size();
    sign_.assign(m_, 1.0);
    types_.resize(m_);

    std::vector<const std::vector<double>*> rows;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
      rows.push_back(&p.le_rows[i]);
      rhs.push_back(p.le_rhs[i]);
      types_[i] = RowType::Le;
    }
    for (std::size_t i = 0; i < p.eq_rows.size(); ++i) {
      rows.push_back(&p.eq_rows[i]);
      rhs.push_back(p.eq_rhs[i]);
      types_[p.le_rows.size() + i] = RowType::Eq;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs[i] < 0.0) {
        sign_[i] = -1.0;
        if (types_[i] == RowType::Le) types_[i] = RowType::Ge;
      }
    }

    // Column layout: originals | one slack per inequality row | artificials.
    slack_col_.assign(m_, npos);
    art_col_.assign(m_, npos);
    std::size_t col = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (types_[i] != RowType::Eq) slack_col_[i] = col++;
    }
    art_begin_ = col;
    for (std::size_t i = 0; i < m_; ++i) {
      if (types_[i] != RowType::Le) art_col_[i] = col++;
    }
    cols_ = col;
    width_ = cols_ + 1;

    a_.assign(m_ * width_, 0.0);
    basis_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = *rows[i];
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign_[i] * r[j];
      if (slack_col_[i] != npos) at(i, slack_col_[i]) = (types_[i] == RowType::Le) ? 1.0 : -1.0;
      if (art_col_[i] != npos) at(i, art_col_[i]) = 1.0;
      at(i, cols_) = sign_[i] * rhs[i];
      basis_[i] = (types_[i] == RowType::Le) ? slack_col_[i] : art_col_[i];
    }
    original_ = a_;
  }

  Solution run(const std::vector<double>& objective) {
    Solution sol;
    // Phase 1: maximize -sum(artificials).
    if (art_begin_ < cols_) {
      std::vector<double> cost(cols_, 0.0);
      for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = -1.0;
      set_costs(cost);
      if (!iterate(/*allow_artificial=*/true)) {
        fail(ErrorKind::Internal, "lp: phase one reported unbounded");
      }
      double infeasibility = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= art_begin_) infeasibility += std::max(0.0, at(i, cols_));
      }
      if (infeasibility > opt_.feasibility_tolerance) {
        sol.status = Status::Infeasible;
        sol.iterations = iterations_;
        return sol;
      }
      drive_out_artificials();
    }

    std::vector<double> cost(cols_, 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    phase2_cost_ = cost;
    set_costs(cost);
    if (!iterate(/*allow_artificial=*/false)) {
      sol.status = Status::Unbounded;
      sol.iterations = iterations_;
      return sol;
    }

    sol.status = Status::Optimal;
    sol.iterations = iterations_;
    sol.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) sol.x[basis_[i]] = std::max(0.0, at(i, cols_));
    }
    sol.value = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sol.value += objective[j] * sol.x[j];
    compute_duals(sol);
    return sol;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  double& at(std::size_t i, std::size_t j) { return a_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * width_ + j]; }

  void set_costs(const std::vector<double>& cost) {
    cost_ = cost;
    reduced_.assign(cols_, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) {
      double r = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const double cb = cost[basis_[i]];
        if (cb != 0.0) r -= cb * at(i, j);
      }
      reduced_[j] = r;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double pv = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= pv;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    const double f = reduced_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= f * at(row, j);
      reduced_[col] = 0.0;
    }
    basis_[row] = col;
  }

  // Returns false when the problem is unbounded in the current phase.
  bool iterate(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : art_begin_;
    std::size_t degenerate_run = 0;
    for (;;) {
      if (iterations_ >= opt_.max_iterations) {
        fail(ErrorKind::SolverStall, "lp: iteration budget exhausted");
      }
      const bool bland = degenerate_run > 50;
      std::size_t enter = npos;
      double best = opt_.optimality_tolerance;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] > best) {
          enter = j;
          if (bland) break;
          best = reduced_[j];
        }
      }
      if (enter == npos) return true;

      std::size_t leave = npos;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double v = at(i, enter);
        if (v <= opt_.pivot_tolerance) continue;
        const double ratio = std::max(0.0, at(i, cols_)) / v;
        if (ratio < best_ratio - 1e-14 ||
            (ratio <= best_ratio + 1e-14 && leave != npos && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == npos) return false;
      degenerate_run = (best_ratio <= 1e-14) ? degenerate_run + 1 : 0;
      pivot(leave, enter);
      ++iterations_;
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      std::size_t best = npos;
      double best_abs = 1e-9;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (std::abs(at(i, j)) > best_abs) {
          best_abs = std::abs(at(i, j));
          best = j;
        }
      }
      if (best != npos) pivot(i, best);
      // Otherwise the row is redundant and its artificial stays basic at zero.
    }
  }

  void compute_duals(Solution& sol) const {
    Eigen::MatrixXd basis_t(m_, m_);
    Eigen::VectorXd cb(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t col = basis_[i];
      cb(static_cast<Eigen::Index>(i)) = col < phase2_cost_.size() ? phase2_cost_[col] : 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        basis_t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r)) =
            original_[r * width_ + col];
      }
    }
    Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m_));
    if (m_ > 0) y = basis_t.fullPivLu().solve(cb);
    sol.le_duals.clear();
    sol.eq_duals.clear();
    for (std::size_t i = 0; i < m_; ++i) {
      const double yi = sign_[i] * y(static_cast<Eigen::Index>(i));
      if (i < le_count_) {
        sol.le_duals.push_back(yi);
      } else {
        sol.eq_duals.push_back(yi);
      }
    }
  }

  Options opt_;
  std::size_t n_ = 0, m_ = 0, le_count_ = 0, cols_ = 0, width_ = 0, art_begin_ = 0;
  std::vector<double> a_, original_;
  std::vector<double> sign_;
  std::vector<RowType> types_;
  std::vector<std::size_t> slack_col_, art_col_, basis_;
  std::vector<double> cost_, reduced_, phase2_cost_;
  std::size_t iterations_ = 0;
};

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
  if (problem.objective.size() != problem.num_vars) {
    fail(ErrorKind::DimensionMismatch, "lp: objective width does not match variable count");
  }
  Tableau tableau(problem, options);
  return tableau.run(problem.objective);
}

}  // namespace gmac::lp
