#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmac {

using Point = std::vector<double>;
using CoordNames = std::vector<std::string>;

// Rate-space tolerances (bits per channel use).
inline constexpr double kRateTolerance = 1e-9;
// Values this close to zero are reported as exactly zero by the secrecy
// capacity evaluators; entropies are accurate to ~1e-15.
inline constexpr double kRateNoiseFloor = 1e-12;
inline constexpr std::size_t kMaxVerticesPerPiece = 100'000;

// coeffs . x <= bound (or == bound when used as an equality).
struct LinearConstraint {
  std::vector<double> coeffs;
  double bound = 0.0;
};

// Builds a coefficient vector over `coords` from (name, value) terms.
// Throws UnknownVariable for names not in coords.
std::vector<double> coefficients(const CoordNames& coords,
                                 std::initializer_list<std::pair<std::string_view, double>> terms);

// Polytope in named rate coordinates. Nonnegativity of every coordinate is
// implicit.
struct RatePolytope {
  CoordNames coords;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;

  std::size_t dim() const { return coords.size(); }
  std::size_t coord(std::string_view name) const;

  RatePolytope& le(std::vector<double> coeffs, double bound);
  RatePolytope& eq(std::vector<double> coeffs, double bound);

  bool satisfies(const Point& x, double tol = kRateTolerance) const;
};

// lhs . x <= [constant + rhs . x]_+
struct PositivePartConstraint {
  std::vector<double> lhs;
  double constant = 0.0;
  std::vector<double> rhs;
};

struct PolytopeTemplate {
  RatePolytope base;
  std::vector<PositivePartConstraint> positive_parts;
};

struct SplitResult {
  std::vector<RatePolytope> pieces;
  std::size_t dropped_empty = 0;
};

// Expands every positive-part constraint into the two-branch union
// {lhs <= constant + rhs.x} or {lhs = 0}. Constraints sharing the same lhs
// share one branch choice (lhs = 0 satisfies all of them at once). Constant
// brackets do not split. Empty pieces are dropped.
SplitResult split_positive_parts(const PolytopeTemplate& tpl);
std::vector<RatePolytope> clip_plus_split(const PolytopeTemplate& tpl);

bool is_feasible(const RatePolytope& piece);

// All vertices of a bounded piece (deduplicated at kRateTolerance). Throws
// VertexEnumerationOverflow beyond `limit`.
std::vector<Point> vertices(const RatePolytope& piece, std::size_t limit = kMaxVerticesPerPiece);

// LP support value of one piece; -infinity if empty, throws Unbounded.
double support(const RatePolytope& piece, const std::vector<double>& direction);

// A union of polytopes, optionally convexified. Once hull_points is set the
// region is the convex hull of those points (each a vertex of some piece).
struct RateRegion {
  CoordNames coords;
  std::vector<RatePolytope> pieces;
  std::vector<std::size_t> provenance;  // per piece, caller-defined source id
  std::optional<std::vector<Point>> hull_points;
  std::vector<std::size_t> hull_sources;  // per hull point, index into pieces
  std::size_t dropped_empty = 0;
  std::vector<std::string> warnings;

  bool convexified() const { return hull_points.has_value(); }
  void add(RatePolytope piece, std::size_t source = 0);
  void append(const RateRegion& other);
};

RateRegion convexify(RateRegion region);

// Membership: some piece within tol, or L-infinity distance to the hull <= tol.
bool contains(const RateRegion& region, const Point& x, double tol = kRateTolerance);

// L-infinity distance from x to the convex hull of `points`.
double hull_distance(const std::vector<Point>& points, const Point& x);

// Max of direction . x over the region (the convex hull of a union has the
// same support as the union). -infinity for an empty region.
double support(const RateRegion& region, const std::vector<double>& direction);

// Adds coordinate equalities to every piece (non-convexified regions only).
RateRegion fix_coordinates(const RateRegion& region, const std::map<std::string, double>& fixed);

struct FrontierPoint {
  std::array<double, 2> point{};
  Point full;
  // (hull point index, weight) for convexified regions, (piece index, 1)
  // otherwise.
  std::vector<std::pair<std::size_t, double>> sources;
};

// Pareto boundary of the 2-D slice through `plane`, swept with support
// directions (cos t, sin t), t in [0, pi/2]. Coordinates listed in `fixed` are
// pinned; any remaining coordinate is left free (projection). Sorted by the
// first plane coordinate, deduplicated at kRateTolerance. Throws EmptySlice.
std::vector<FrontierPoint> frontier_detailed(const RateRegion& region,
                                             const std::array<std::string, 2>& plane,
                                             const std::map<std::string, double>& fixed,
                                             std::size_t resolution);
std::vector<std::array<double, 2>> frontier(const RateRegion& region,
                                            const std::array<std::string, 2>& plane,
                                            const std::map<std::string, double>& fixed,
                                            std::size_t resolution);

// Header row with the plane names, then one row per point at 9 significant digits.
std::string frontier_csv(const std::vector<std::array<double, 2>>& points,
                         const std::array<std::string, 2>& plane);

}  // namespace gmac
