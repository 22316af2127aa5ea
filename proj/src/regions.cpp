#include "gmac/regions.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "gmac/error.hpp"
#include "gmac/lp.hpp"

namespace gmac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(const std::vector<double>& a, const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

void require_width(const std::vector<double>& v, std::size_t d, const char* what) {
  if (v.size() != d) fail(ErrorKind::DimensionMismatch, std::string(what) + ": dimension mismatch");
}

lp::Problem piece_problem(const RatePolytope& piece) {
  lp::Problem prob(piece.dim());
  for (const auto& c : piece.inequalities) prob.add_le(c.coeffs, c.bound);
  for (const auto& c : piece.equalities) prob.add_eq(c.coeffs, c.bound);
  return prob;
}

}  // namespace

std::vector<double> coefficients(const CoordNames& coords,
                                 std::initializer_list<std::pair<std::string_view, double>> terms) {
  std::vector<double> out(coords.size(), 0.0);
  for (const auto& [name, value] : terms) {
    const auto it = std::find(coords.begin(), coords.end(), name);
    if (it == coords.end()) {
      fail(ErrorKind::UnknownVariable, "unknown rate coordinate '" + std::string(name) + "'");
    }
    out[static_cast<std::size_t>(it - coords.begin())] += value;
  }
  return out;
}

std::size_t RatePolytope::coord(std::string_view name) const {
  const auto it = std::find(coords.begin(), coords.end(), name);
  if (it == coords.end()) {
    fail(ErrorKind::UnknownVariable, "unknown rate coordinate '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - coords.begin());
}

RatePolytope& RatePolytope::le(std::vector<double> coeffs, double bound) {
  require_width(coeffs, dim(), "constraint");
  if (!std::isfinite(bound)) fail(ErrorKind::InvalidInput, "constraint bound must be finite");
  inequalities.push_back({std::move(coeffs), bound});
  return *this;
}

RatePolytope& RatePolytope::eq(std::vector<double> coeffs, double bound) {
  require_width(coeffs, dim(), "constraint");
  if (!std::isfinite(bound)) fail(ErrorKind::InvalidInput, "constraint bound must be finite");
  equalities.push_back({std::move(coeffs), bound});
  return *this;
}

bool RatePolytope::satisfies(const Point& x, double tol) const {
  require_width(x, dim(), "point");
  for (double v : x)
    if (v < -tol) return false;
  for (const auto& c : inequalities)
    if (dot(c.coeffs, x) > c.bound + tol) return false;
  for (const auto& c : equalities)
    if (std::abs(dot(c.coeffs, x) - c.bound) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Positive-part splitting.

SplitResult split_positive_parts(const PolytopeTemplate& tpl) {
  const std::size_t d = tpl.base.dim();
  struct Group {
    std::vector<double> lhs;
    std::vector<const PositivePartConstraint*> members;
  };
  std::vector<Group> groups;
  for (const auto& pp : tpl.positive_parts) {
    require_width(pp.lhs, d, "positive-part lhs");
    require_width(pp.rhs, d, "positive-part rhs");
    if (std::any_of(pp.lhs.begin(), pp.lhs.end(), [](double c) { return c < 0.0; })) {
      fail(ErrorKind::InvalidInput, "positive-part lhs must have nonnegative coefficients");
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.lhs == pp.lhs; });
    if (it == groups.end()) {
      groups.push_back({pp.lhs, {&pp}});
    } else {
      it->members.push_back(&pp);
    }
  }

  enum class Branches { AffineOnly, ZeroOnly, Both };
  std::vector<Branches> choice(groups.size(), Branches::AffineOnly);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    bool varying = false, negative_constant = false;
    for (const auto* m : groups[g].members) {
      const bool constant = std::all_of(m->rhs.begin(), m->rhs.end(), [](double c) { return c == 0.0; });
      if (!constant) varying = true;
      if (constant && m->constant < 0.0) negative_constant = true;
    }
    choice[g] = negative_constant ? Branches::ZeroOnly : varying ? Branches::Both : Branches::AffineOnly;
  }

  auto add_affine = [](RatePolytope& piece, const Group& g) {
    for (const auto* m : g.members) {
      std::vector<double> row(m->lhs);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] -= m->rhs[i];
      piece.le(std::move(row), m->constant);
    }
  };

  SplitResult out;
  // Odometer over groups with two branches; the affine branch comes first.
  std::vector<int> zero(groups.size(), 0);
  for (;;) {
    RatePolytope piece = tpl.base;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const bool use_zero = choice[g] == Branches::ZeroOnly || (choice[g] == Branches::Both && zero[g]);
      if (use_zero) {
        piece.eq(groups[g].lhs, 0.0);
      } else {
        add_affine(piece, groups[g]);
      }
    }
    if (is_feasible(piece)) {
      out.pieces.push_back(std::move(piece));
    } else {
      ++out.dropped_empty;
    }

    std::size_t g = groups.size();
    while (g-- > 0) {
      if (choice[g] != Branches::Both) continue;
      if (zero[g] == 0) {
        zero[g] = 1;
        break;
      }
      zero[g] = 0;
    }
    if (g == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<RatePolytope> clip_plus_split(const PolytopeTemplate& tpl) {
  return split_positive_parts(tpl).pieces;
}

bool is_feasible(const RatePolytope& piece) {
  return lp::solve(piece_problem(piece)).status == lp::Status::Optimal;
}

// ---------------------------------------------------------------------------
// Vertex enumeration by brute force over active sets (dimension <= 5).

std::vector<Point> vertices(const RatePolytope& piece, std::size_t limit) {
  const std::size_t d = piece.dim();
  if (d == 0) return {};

  // Inequalities: explicit rows (duplicates merged) followed by -x_i <= 0.
  std::vector<LinearConstraint> rows;
  for (const auto& c : piece.inequalities) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const LinearConstraint& r) { return r.coeffs == c.coeffs; });
    if (it == rows.end()) {
      rows.push_back(c);
    } else {
      it->bound = std::min(it->bound, c.bound);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> row(d, 0.0);
    row[i] = -1.0;
    rows.push_back({std::move(row), 0.0});
  }

  // Keep a linearly independent subset of the equalities.
  std::vector<LinearConstraint> eqs;
  {
    Eigen::MatrixXd acc(0, static_cast<Eigen::Index>(d));
    for (const auto& c : piece.equalities) {
      Eigen::MatrixXd trial(acc.rows() + 1, acc.cols());
      trial << acc, Eigen::Map<const Eigen::RowVectorXd>(c.coeffs.data(), static_cast<Eigen::Index>(d));
      Eigen::FullPivLU<Eigen::MatrixXd> lu(trial);
      lu.setThreshold(1e-10);
      if (lu.rank() == trial.rows()) {
        acc = trial;
        eqs.push_back(c);
      }
    }
  }
  if (eqs.size() > d) return {};
  const std::size_t k = d - eqs.size();
  const std::size_t m = rows.size();
  if (k > m) return {};

  auto feasible = [&](const Point& x) {
    for (const auto& r : rows)
      if (dot(r.coeffs, x) > r.bound + kRateTolerance * std::max(1.0, std::abs(r.bound))) return false;
    for (const auto& c : piece.equalities)
      if (std::abs(dot(c.coeffs, x) - c.bound) > kRateTolerance * std::max(1.0, std::abs(c.bound))) return false;
    return true;
  };

  std::vector<Point> out;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  Eigen::VectorXd b(static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = eqs[r].coeffs[c];
    b(static_cast<Eigen::Index>(r)) = eqs[r].bound;
  }

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto r = static_cast<Eigen::Index>(eqs.size() + i);
      for (std::size_t c = 0; c < d; ++c) a(r, static_cast<Eigen::Index>(c)) = rows[pick[i]].coeffs[c];
      b(r) = rows[pick[i]].bound;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-10);
    if (lu.isInvertible()) {
      const Eigen::VectorXd sol = lu.solve(b);
      Point x(sol.data(), sol.data() + d);
      for (double& v : x)
        if (std::abs(v) < 1e-13) v = 0.0;
      if (feasible(x)) {
        const bool dup = std::any_of(out.begin(), out.end(), [&](const Point& p) {
          for (std::size_t i = 0; i < d; ++i)
            if (std::abs(p[i] - x[i]) > kRateTolerance) return false;
          return true;
        });
        if (!dup) {
          out.push_back(std::move(x));
          if (out.size() > limit) {
            fail(ErrorKind::VertexEnumerationOverflow, "piece has more than " + std::to_string(limit) + " vertices");
          }
        }
      }
    }
    // Next k-combination of [0, m).
    if (k == 0) break;
    std::size_t i = k;
    while (i-- > 0) {
      if (pick[i] < m - k + i) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double support(const RatePolytope& piece, const std::vector<double>& direction) {
  require_width(direction, piece.dim(), "direction");
  auto prob = piece_problem(piece);
  prob.objective = direction;
  const auto sol = lp::solve(prob);
  if (sol.status == lp::Status::Infeasible) return -kInf;
  if (sol.status == lp::Status::Unbounded) {
    fail(ErrorKind::Unbounded, "piece is unbounded in the requested direction");
  }
  return sol.value;
}

// ---------------------------------------------------------------------------
// Linear programs over the convex hull of a point cloud, solved by column
// generation: only a working set of points enters each restricted master.

namespace {

struct ExtraColumn {
  double objective = 0.0;
  std::vector<double> eq;
  std::vector<double> le;
};

struct CloudProblem {
  const std::vector<Point>* points = nullptr;
  std::function<double(const Point&)> objective;
  // Eq/le coefficients of a point's weight column.
  std::function<void(const Point&, std::vector<double>& eq, std::vector<double>& le)> column;
  std::vector<ExtraColumn> extras;
  std::vector<double> eq_rhs;
  std::vector<double> le_rhs;
};

struct CloudSolution {
  bool feasible = false;
  double value = 0.0;
  std::vector<std::pair<std::size_t, double>> weights;
  std::vector<double> extras;
  std::vector<double> eq_duals;
  std::vector<std::size_t> working;
};

CloudSolution solve_cloud(const CloudProblem& cp, std::vector<std::size_t> working) {
  const auto& pts = *cp.points;
  const std::size_t meq = cp.eq_rhs.size(), mle = cp.le_rhs.size();
  const std::size_t nextra = cp.extras.size();
  const std::size_t nart = meq * 2 + mle;
  std::sort(working.begin(), working.end());
  working.erase(std::unique(working.begin(), working.end()), working.end());
  std::vector<char> in_working(pts.size(), 0);
  for (auto w : working) in_working[w] = 1;

  std::vector<double> eqc(meq), lec(mle);
  std::vector<double> art_cap;  // phase-two bounds on the artificials

  CloudSolution result;
  for (int phase = 1; phase <= 2; ++phase) {
    for (std::size_t round = 0;; ++round) {
      if (round > 10000) fail(ErrorKind::SolverStall, "hull LP column generation did not converge");
      const std::size_t nw = working.size();
      const std::size_t nvar = nw + nextra + nart;
      lp::Problem prob(nvar);
      std::vector<std::vector<double>> eq_rows(meq, std::vector<double>(nvar, 0.0));
      std::vector<std::vector<double>> le_rows(mle, std::vector<double>(nvar, 0.0));
      for (std::size_t w = 0; w < nw; ++w) {
        cp.column(pts[working[w]], eqc, lec);
        for (std::size_t r = 0; r < meq; ++r) eq_rows[r][w] = eqc[r];
        for (std::size_t r = 0; r < mle; ++r) le_rows[r][w] = lec[r];
        if (phase == 2) prob.objective[w] = cp.objective(pts[working[w]]);
      }
      for (std::size_t e = 0; e < nextra; ++e) {
        const auto& ex = cp.extras[e];
        for (std::size_t r = 0; r < meq; ++r) eq_rows[r][nw + e] = ex.eq[r];
        for (std::size_t r = 0; r < mle; ++r) le_rows[r][nw + e] = ex.le[r];
        if (phase == 2) prob.objective[nw + e] = ex.objective;
      }
      const std::size_t a0 = nw + nextra;
      for (std::size_t r = 0; r < meq; ++r) {
        eq_rows[r][a0 + 2 * r] = 1.0;
        eq_rows[r][a0 + 2 * r + 1] = -1.0;
      }
      for (std::size_t r = 0; r < mle; ++r) le_rows[r][a0 + 2 * meq + r] = -1.0;
      for (std::size_t a = 0; a < nart; ++a) {
        if (phase == 1) prob.objective[a0 + a] = -1.0;
      }
      for (std::size_t r = 0; r < meq; ++r) prob.add_eq(std::move(eq_rows[r]), cp.eq_rhs[r]);
      for (std::size_t r = 0; r < mle; ++r) prob.add_le(std::move(le_rows[r]), cp.le_rhs[r]);
      if (phase == 2) {
        for (std::size_t a = 0; a < nart; ++a) {
          std::vector<double> row(nvar, 0.0);
          row[a0 + a] = 1.0;
          prob.add_le(std::move(row), art_cap[a]);
        }
      }

      const auto sol = lp::solve(prob);
      if (sol.status != lp::Status::Optimal) {
        fail(ErrorKind::Internal, "hull LP restricted master did not reach an optimum");
      }

      // Price every point outside the working set.
      std::vector<std::pair<double, std::size_t>> entering;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (in_working[j]) continue;
        cp.column(pts[j], eqc, lec);
        double r = phase == 2 ? cp.objective(pts[j]) : 0.0;
        for (std::size_t i = 0; i < meq; ++i) r -= sol.eq_duals[i] * eqc[i];
        for (std::size_t i = 0; i < mle; ++i) r -= sol.le_duals[i] * lec[i];
        if (r > 1e-10) entering.emplace_back(-r, j);
      }
      if (entering.empty()) {
        if (phase == 1) {
          double residual = 0.0;
          art_cap.assign(nart, 0.0);
          for (std::size_t a = 0; a < nart; ++a) {
            residual += sol.x[a0 + a];
            art_cap[a] = sol.x[a0 + a] > 1e-13 ? sol.x[a0 + a] : 0.0;
          }
          if (residual > 1e-7) {
            result.feasible = false;
            result.working = working;
            return result;
          }
        } else {
          result.feasible = true;
          result.value = sol.value;
          result.eq_duals = sol.eq_duals;
          for (std::size_t w = 0; w < nw; ++w) {
            if (sol.x[w] > 1e-12) result.weights.emplace_back(working[w], sol.x[w]);
          }
          result.extras.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(nw),
                               sol.x.begin() + static_cast<std::ptrdiff_t>(nw + nextra));
          result.working = working;
        }
        break;
      }
      std::sort(entering.begin(), entering.end());
      const std::size_t take = std::min<std::size_t>(entering.size(), 16);
      for (std::size_t t = 0; t < take; ++t) {
        working.push_back(entering[t].second);
        in_working[entering[t].second] = 1;
      }
    }
  }
  return result;
}

std::vector<std::size_t> seed_working_set(const std::vector<Point>& pts,
                                          const std::function<double(const Point&)>& objective) {
  std::vector<std::size_t> out;
  if (pts.empty()) return out;
  const std::size_t d = pts.front().size();
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
      if (pts[j][k] < pts[lo][k]) lo = j;
      if (pts[j][k] > pts[hi][k]) hi = j;
    }
    out.push_back(lo);
    out.push_back(hi);
  }
  if (objective) {
    std::size_t best = 0;
    double bv = objective(pts[0]);
    for (std::size_t j = 1; j < pts.size(); ++j) {
      const double v = objective(pts[j]);
      if (v > bv) {
        bv = v;
        best = j;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace

double hull_distance(const std::vector<Point>& points, const Point& x) {
  if (points.empty()) return kInf;
  const std::size_t d = x.size();
  for (const auto& p : points) require_width(p, d, "hull point");

  // Variables: weights, s+_k, s-_k, t.  rows: sum_j w_j v_j + s+ - s- = x,
  // sum_j w_j = 1, s+_k - t <= 0, s-_k - t <= 0.  maximize -t.
  CloudProblem cp;
  cp.points = &points;
  cp.objective = [](const Point&) { return 0.0; };
  cp.column = [d](const Point& p, std::vector<double>& eq, std::vector<double>& le) {
    for (std::size_t k = 0; k < d; ++k) eq[k] = p[k];
    eq[d] = 1.0;
    std::fill(le.begin(), le.end(), 0.0);
  };
  cp.eq_rhs = x;
  cp.eq_rhs.push_back(1.0);
  cp.le_rhs.assign(2 * d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    for (int sign : {1, -1}) {
      ExtraColumn col;
      col.eq.assign(d + 1, 0.0);
      col.le.assign(2 * d, 0.0);
      col.eq[k] = sign;
      col.le[sign > 0 ? k : d + k] = 1.0;
      cp.extras.push_back(std::move(col));
    }
  }
  ExtraColumn t;
  t.objective = -1.0;
  t.eq.assign(d + 1, 0.0);
  t.le.assign(2 * d, -1.0);
  cp.extras.push_back(std::move(t));

  std::size_t nearest = 0;
  double nd = kInf;
  for (std::size_t j = 0; j < points.size(); ++j) {
    double m = 0.0;
    for (std::size_t k = 0; k < d; ++k) m = std::max(m, std::abs(points[j][k] - x[k]));
    if (m < nd) {
      nd = m;
      nearest = j;
    }
  }
  auto working = seed_working_set(points, nullptr);
  working.push_back(nearest);
  const auto sol = solve_cloud(cp, working);
  if (!sol.feasible) fail(ErrorKind::Internal, "hull distance LP reported infeasible");
  return std::max(0.0, -sol.value);
}

// ---------------------------------------------------------------------------

void RateRegion::add(RatePolytope piece, std::size_t source) {
  if (coords.empty() && pieces.empty()) coords = piece.coords;
  if (piece.coords != coords) fail(ErrorKind::DimensionMismatch, "region pieces must share coordinates");
  pieces.push_back(std::move(piece));
  provenance.push_back(source);
  hull_points.reset();
  hull_sources.clear();
}

void RateRegion::append(const RateRegion& other) {
  if (other.pieces.empty()) {
    dropped_empty += other.dropped_empty;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    return;
  }
  for (std::size_t i = 0; i < other.pieces.size(); ++i) add(other.pieces[i], other.provenance[i]);
  dropped_empty += other.dropped_empty;
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

RateRegion convexify(RateRegion region) {
  struct Tagged {
    std::vector<long long> key;
    Point p;
    std::size_t source;
  };
  std::vector<Tagged> cloud;
  for (std::size_t i = 0; i < region.pieces.size(); ++i) {
    for (auto& v : vertices(region.pieces[i])) {
      Tagged t;
      t.key.reserve(v.size());
      for (double x : v) t.key.push_back(std::llround(x / kRateTolerance));
      t.p = std::move(v);
      t.source = i;
      cloud.push_back(std::move(t));
    }
  }
  std::sort(cloud.begin(), cloud.end(), [](const Tagged& a, const Tagged& b) {
    return a.key != b.key ? a.key < b.key : a.source < b.source;
  });
  std::vector<Point> hull;
  region.hull_sources.clear();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (i > 0 && cloud[i].key == cloud[i - 1].key) continue;
    hull.push_back(std::move(cloud[i].p));
    region.hull_sources.push_back(cloud[i].source);
  }
  region.hull_points = std::move(hull);
  return region;
}

bool contains(const RateRegion& region, const Point& x, double tol) {
  require_width(x, region.coords.size(), "point");
  for (const auto& piece : region.pieces)
    if (piece.satisfies(x, tol)) return true;
  if (!region.hull_points) return false;
  const auto& pts = *region.hull_points;
  if (pts.empty()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double lo = kInf, hi = -kInf;
    for (const auto& p : pts) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    if (x[k] < lo - tol || x[k] > hi + tol) return false;
  }
  return hull_distance(pts, x) <= tol;
}

double support(const RateRegion& region, const std::vector<double>& direction) {
  require_width(direction, region.coords.size(), "direction");
  if (std::all_of(direction.begin(), direction.end(), [](double v) { return v == 0.0; })) {
    fail(ErrorKind::InvalidInput, "support direction must be nonzero");
  }
  double best = -kInf;
  if (region.hull_points) {
    for (const auto& p : *region.hull_points) best = std::max(best, dot(direction, p));
    return best;
  }
  for (const auto& piece : region.pieces) best = std::max(best, support(piece, direction));
  return best;
}

RateRegion fix_coordinates(const RateRegion& region, const std::map<std::string, double>& fixed) {
  RateRegion out;
  out.coords = region.coords;
  out.dropped_empty = region.dropped_empty;
  out.warnings = region.warnings;
  for (std::size_t i = 0; i < region.pieces.size(); ++i) {
    RatePolytope piece = region.pieces[i];
    for (const auto& [name, value] : fixed) {
      std::vector<double> row(piece.dim(), 0.0);
      row[piece.coord(name)] = 1.0;
      piece.eq(std::move(row), value);
    }
    out.pieces.push_back(std::move(piece));
    out.provenance.push_back(region.provenance[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frontier sweep.

namespace {

struct SweepResult {
  bool feasible = false;
  Point x;
  std::vector<std::pair<std::size_t, double>> sources;
};

// Lexicographic solve: maximize `primary`, then optimize `secondary` over the
// primary optimal face. The face is pinned through complementary slackness
// (rows with a positive dual become equalities, columns with a negative
// reduced cost are fixed at zero), so the tie-break cannot drift.
SweepResult solve_piece_lex(const RatePolytope& piece, const std::vector<double>& primary,
                            const std::vector<double>& secondary) {
  SweepResult r;
  auto prob = piece_problem(piece);
  prob.objective = primary;
  const auto s1 = lp::solve(prob);
  if (s1.status == lp::Status::Infeasible) return r;
  if (s1.status == lp::Status::Unbounded) fail(ErrorKind::Unbounded, "frontier direction is unbounded");
  r.feasible = true;
  r.x = s1.x;

  const std::size_t n = prob.num_vars;
  lp::Problem face(n);
  face.objective = secondary;
  std::vector<double> reduced(primary);
  for (std::size_t i = 0; i < prob.le_rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= s1.le_duals[i] * prob.le_rows[i][j];
    if (s1.le_duals[i] > 1e-9) {
      face.add_eq(prob.le_rows[i], prob.le_rhs[i]);
    } else {
      face.add_le(prob.le_rows[i], prob.le_rhs[i]);
    }
  }
  for (std::size_t i = 0; i < prob.eq_rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= s1.eq_duals[i] * prob.eq_rows[i][j];
    face.add_eq(prob.eq_rows[i], prob.eq_rhs[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced[j] < -1e-9) {
      std::vector<double> row(n, 0.0);
      row[j] = 1.0;
      face.add_eq(std::move(row), 0.0);
    }
  }
  const auto s2 = lp::solve(face);
  if (s2.status == lp::Status::Optimal && dot(primary, s2.x) >= s1.value - 1e-9 * (1.0 + std::abs(s1.value))) {
    r.x = s2.x;
  }
  return r;
}

SweepResult solve_hull_lex(const std::vector<Point>& pts, const std::vector<std::size_t>& fixed_idx,
                           const std::vector<double>& fixed_val, const std::vector<double>& primary,
                           const std::vector<double>& secondary, std::vector<std::size_t>& working) {
  SweepResult r;
  CloudProblem cp;
  cp.points = &pts;
  cp.objective = [&primary](const Point& p) { return dot(primary, p); };
  cp.column = [&fixed_idx](const Point& p, std::vector<double>& eq, std::vector<double>& le) {
    eq[0] = 1.0;
    for (std::size_t k = 0; k < fixed_idx.size(); ++k) eq[k + 1] = p[fixed_idx[k]];
    std::fill(le.begin(), le.end(), 0.0);
  };
  cp.eq_rhs.push_back(1.0);
  cp.eq_rhs.insert(cp.eq_rhs.end(), fixed_val.begin(), fixed_val.end());
  auto seed = seed_working_set(pts, cp.objective);
  working.insert(working.end(), seed.begin(), seed.end());
  const auto s1 = solve_cloud(cp, working);
  if (!s1.feasible) return r;
  working = s1.working;

  // The primary optimal face is the hull of the points with zero reduced
  // cost; the tie-break runs over that subset only.
  std::vector<Point> face;
  std::vector<std::size_t> face_index;
  std::vector<double> eqc(cp.eq_rhs.size()), lec;
  // Near-optimal points off the face would let the tie-break slide along it.
  const double tol = 1e-12 * (1.0 + std::abs(s1.value));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    cp.column(pts[j], eqc, lec);
    double rc = dot(primary, pts[j]);
    for (std::size_t i = 0; i < eqc.size(); ++i) rc -= s1.eq_duals[i] * eqc[i];
    if (rc >= -tol) {
      face.push_back(pts[j]);
      face_index.push_back(j);
    }
  }
  CloudProblem cp2 = cp;
  cp2.points = &face;
  cp2.objective = [&secondary](const Point& p) { return dot(secondary, p); };
  auto s2 = solve_cloud(cp2, seed_working_set(face, cp2.objective));
  for (auto& [j, w] : s2.weights) j = face_index[j];
  double s2_primary = 0.0;
  for (const auto& [j, w] : s2.weights) s2_primary += w * dot(primary, pts[j]);
  const bool keep = s2.feasible && s2_primary >= s1.value - tol;
  const auto& best = keep ? s2 : s1;
  r.feasible = true;
  r.x.assign(pts.front().size(), 0.0);
  for (const auto& [j, w] : best.weights) {
    for (std::size_t k = 0; k < r.x.size(); ++k) r.x[k] += w * pts[j][k];
  }
  r.sources = best.weights;
  return r;
}

}  // namespace

std::vector<FrontierPoint> frontier_detailed(const RateRegion& region,
                                             const std::array<std::string, 2>& plane,
                                             const std::map<std::string, double>& fixed,
                                             std::size_t resolution) {
  if (resolution < 2) fail(ErrorKind::InvalidInput, "frontier resolution must be at least 2");
  const std::size_t d = region.coords.size();
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(region.coords.begin(), region.coords.end(), name);
    if (it == region.coords.end()) fail(ErrorKind::UnknownVariable, "unknown rate coordinate '" + name + "'");
    return static_cast<std::size_t>(it - region.coords.begin());
  };
  const std::size_t ia = index_of(plane[0]);
  const std::size_t ib = index_of(plane[1]);
  if (ia == ib) fail(ErrorKind::InvalidInput, "frontier plane needs two distinct coordinates");
  std::vector<std::size_t> fixed_idx;
  std::vector<double> fixed_val;
  for (const auto& [name, value] : fixed) {
    const std::size_t k = index_of(name);
    if (k == ia || k == ib) fail(ErrorKind::InvalidInput, "cannot fix a plane coordinate");
    fixed_idx.push_back(k);
    fixed_val.push_back(value);
  }

  std::vector<RatePolytope> sliced;
  if (!region.hull_points) {
    for (auto piece : region.pieces) {
      for (std::size_t k = 0; k < fixed_idx.size(); ++k) {
        std::vector<double> row(d, 0.0);
        row[fixed_idx[k]] = 1.0;
        piece.eq(std::move(row), fixed_val[k]);
      }
      sliced.push_back(std::move(piece));
    }
  }

  std::vector<FrontierPoint> raw;
  std::vector<std::size_t> working;
  for (std::size_t step = 0; step < resolution; ++step) {
    double c = 1.0, s = 0.0;
    if (step == resolution - 1) {
      c = 0.0;
      s = 1.0;
    } else if (step > 0) {
      const double theta = 0.5 * std::numbers::pi * static_cast<double>(step) / static_cast<double>(resolution - 1);
      c = std::cos(theta);
      s = std::sin(theta);
    }
    std::vector<double> primary(d, 0.0), secondary(d, 0.0);
    primary[ia] = c;
    primary[ib] = s;
    // On the axis directions, take the face endpoint nearest the other axis.
    if (step == 0) {
      secondary[ib] = -1.0;
    } else if (step == resolution - 1) {
      secondary[ia] = -1.0;
    } else {
      secondary[ia] = 1.0;
    }

    FrontierPoint fp;
    if (region.hull_points) {
      if (region.hull_points->empty()) break;
      const auto r = solve_hull_lex(*region.hull_points, fixed_idx, fixed_val, primary, secondary, working);
      if (!r.feasible) break;
      fp.full = r.x;
      fp.sources = r.sources;
    } else {
      double best = -kInf;
      std::size_t best_piece = sliced.size();
      for (std::size_t p = 0; p < sliced.size(); ++p) {
        const double v = support(sliced[p], primary);
        if (v > best + 1e-12) {
          best = v;
          best_piece = p;
        }
      }
      if (best_piece == sliced.size()) break;
      const auto r = solve_piece_lex(sliced[best_piece], primary, secondary);
      fp.full = r.x;
      fp.sources = {{best_piece, 1.0}};
    }
    fp.point = {fp.full[ia], fp.full[ib]};
    raw.push_back(std::move(fp));
  }
  if (raw.empty()) fail(ErrorKind::EmptySlice, "the requested slice is empty for every piece");

  // Drop points strictly dominated in both coordinates, then sort and dedupe.
  std::vector<FrontierPoint> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j) {
      dominated = raw[j].point[0] > raw[i].point[0] + kRateTolerance &&
                  raw[j].point[1] > raw[i].point[1] + kRateTolerance;
    }
    if (!dominated) kept.push_back(raw[i]);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
    if (a.point[0] != b.point[0]) return a.point[0] < b.point[0];
    return a.point[1] > b.point[1];
  });
  std::vector<FrontierPoint> out;
  for (auto& fp : kept) {
    if (!out.empty() && std::abs(out.back().point[0] - fp.point[0]) <= kRateTolerance &&
        std::abs(out.back().point[1] - fp.point[1]) <= kRateTolerance) {
      continue;
    }
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<std::array<double, 2>> frontier(const RateRegion& region,
                                            const std::array<std::string, 2>& plane,
                                            const std::map<std::string, double>& fixed,
                                            std::size_t resolution) {
  std::vector<std::array<double, 2>> out;
  for (const auto& fp : frontier_detailed(region, plane, fixed, resolution)) out.push_back(fp.point);
  return out;
}

std::string frontier_csv(const std::vector<std::array<double, 2>>& points,
                         const std::array<std::string, 2>& plane) {
  std::ostringstream os;
  os << plane[0] << ',' << plane[1] << '\n';
  char buf[64];
  for (const auto& p : points) {
    // Normalize -0 so identical regions print identically.
    const double a = p[0] == 0.0 ? 0.0 : p[0];
    const double b = p[1] == 0.0 ? 0.0 : p[1];
    std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", a, b);
    os << buf;
  }
  return os.str();
}

}  // namespace gmac
