#include "gmac/one_set_bounds.hpp"

#include <cmath>

#include "gmac/error.hpp"

namespace gmac {

const CoordNames& equivocation_coords() {
  static const CoordNames c{"R0", "R1", "Re"};
  return c;
}

const CoordNames& secrecy_coords() {
  static const CoordNames c{"R0", "R1"};
  return c;
}

double snap_rate(double x) { return std::abs(x) < kRateNoiseFloor ? 0.0 : x; }

OneSetTerms one_set_terms(const SchemeOneSet& scheme, const ChannelSpec& channel) {
  const auto j = assemble_joint_one_set(scheme, channel);
  OneSetTerms t;
  t.a = mutual_information(j, {"U"}, {"Y"}, {"X2", "Q"});
  t.b = mutual_information(j, {"U", "X2", "Q"}, {"Y"});
  t.d = mutual_information(j, {"U"}, {"Y2"}, {"X2", "Q"});
  return t;
}

OuterTerms outer_terms(const SchemeOneSetOuter& scheme, const ChannelSpec& channel) {
  const auto j = assemble_joint_outer(scheme, channel);
  OuterTerms t;
  t.r1 = mutual_information(j, {"U"}, {"Y"}, {"X2", "V"});
  t.base.a = mutual_information(j, {"U"}, {"Y"}, {"X2", "Q"});
  t.base.b = mutual_information(j, {"U", "X2", "Q"}, {"Y"});
  t.base.d = mutual_information(j, {"U"}, {"Y2"}, {"X2", "Q"});
  return t;
}

DegradedTerms degraded_terms(const SchemeDegraded& scheme, const ChannelSpec& channel) {
  const auto j = assemble_joint_degraded(scheme, channel);
  DegradedTerms t;
  t.a = mutual_information(j, {"X1"}, {"Y"}, {"X2", "Q"});
  t.b = mutual_information(j, {"X1", "X2"}, {"Y"});
  t.d = mutual_information(j, {"X1"}, {"Y2"}, {"X2", "Q"});
  return t;
}

PolytopeTemplate inner_template(const OneSetTerms& t) {
  const auto& c = equivocation_coords();
  PolytopeTemplate tpl{RatePolytope{c, {}, {}}, {}};
  tpl.base.le(coefficients(c, {{"R1", 1}}), t.a)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}}), t.b)
      .le(coefficients(c, {{"Re", 1}, {"R1", -1}}), 0.0);
  const auto re = coefficients(c, {{"Re", 1}});
  tpl.positive_parts.push_back({re, snap_rate(t.a - t.d), std::vector<double>(3, 0.0)});
  tpl.positive_parts.push_back({re, snap_rate(t.b - t.d), coefficients(c, {{"R0", -1}})});
  return tpl;
}

RateRegion inner_region(const OneSetTerms& t) {
  auto split = split_positive_parts(inner_template(t));
  RateRegion r;
  r.coords = equivocation_coords();
  for (auto& p : split.pieces) r.add(std::move(p));
  r.dropped_empty = split.dropped_empty;
  return r;
}

RateRegion inner_polytope(const SchemeOneSet& scheme, const ChannelSpec& channel) {
  return inner_region(one_set_terms(scheme, channel));
}

namespace {

// Adds the piece when feasible, otherwise counts it as dropped.
RateRegion single_piece(RatePolytope piece) {
  RateRegion r;
  r.coords = piece.coords;
  if (is_feasible(piece)) {
    r.add(std::move(piece));
  } else {
    r.dropped_empty = 1;
  }
  return r;
}

}  // namespace

RateRegion outer_region(const OuterTerms& t) {
  const auto& c = equivocation_coords();
  RatePolytope p{c, {}, {}};
  const double a_d = snap_rate(t.base.a - t.base.d);
  const double b_d = snap_rate(t.base.b - t.base.d);
  p.le(coefficients(c, {{"R1", 1}}), t.r1)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}}), t.base.b)
      .le(coefficients(c, {{"Re", 1}, {"R1", -1}}), 0.0)
      .le(coefficients(c, {{"Re", 1}}), a_d)
      .le(coefficients(c, {{"R0", 1}, {"Re", 1}}), b_d);
  return single_piece(std::move(p));
}

RateRegion outer_polytope(const SchemeOneSetOuter& scheme, const ChannelSpec& channel) {
  return outer_region(outer_terms(scheme, channel));
}

RateRegion secrecy_region(const OneSetTerms& t) {
  const auto& c = secrecy_coords();
  const double a_d = snap_rate(t.a - t.d);
  const double b_d = snap_rate(t.b - t.d);
  RateRegion r;
  r.coords = c;
  if (a_d < 0.0 || b_d < 0.0) {
    r.dropped_empty = 1;
    return r;
  }
  RatePolytope p{c, {}, {}};
  p.le(coefficients(c, {{"R1", 1}}), a_d).le(coefficients(c, {{"R0", 1}, {"R1", 1}}), b_d);
  r.add(std::move(p));
  return r;
}

RateRegion secrecy_polytope(const SchemeOneSet& scheme, const ChannelSpec& channel) {
  return secrecy_region(one_set_terms(scheme, channel));
}

double secrecy_capacity_from_terms(const OneSetTerms& t, double r0) {
  if (!(r0 >= 0.0) || !std::isfinite(r0)) fail(ErrorKind::InvalidInput, "common rate must be nonnegative");
  const double v = std::min(snap_rate(t.a - t.d), snap_rate(t.b - t.d - r0));
  return v < kRateNoiseFloor ? 0.0 : v;
}

double secrecy_capacity_value(const SchemeOneSet& scheme, const ChannelSpec& channel, double r0) {
  return secrecy_capacity_from_terms(one_set_terms(scheme, channel), r0);
}

RateRegion degraded_region(const DegradedTerms& t) {
  const auto& c = equivocation_coords();
  RatePolytope p{c, {}, {}};
  p.le(coefficients(c, {{"R1", 1}}), t.a)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}}), t.b)
      .le(coefficients(c, {{"Re", 1}, {"R1", -1}}), 0.0)
      .le(coefficients(c, {{"Re", 1}}), snap_rate(t.a - t.d))
      .le(coefficients(c, {{"R0", 1}, {"Re", 1}}), snap_rate(t.b - t.d));
  return single_piece(std::move(p));
}

RateRegion degraded_polytope(const SchemeDegraded& scheme, const ChannelSpec& channel,
                             std::optional<Degradedness> verdict) {
  if (!verdict) verdict = classify_degradedness(channel).verdict;
  auto r = degraded_region(degraded_terms(scheme, channel));
  if (*verdict == Degradedness::NotDegraded) r.warnings.emplace_back(kNotDegradedWarning);
  return r;
}

RateRegion degraded_secrecy_polytope(const SchemeDegraded& scheme, const ChannelSpec& channel) {
  return secrecy_region(degraded_terms(scheme, channel));
}

double degraded_secrecy_capacity_value(const SchemeDegraded& scheme, const ChannelSpec& channel,
                                       double r0) {
  return secrecy_capacity_from_terms(degraded_terms(scheme, channel), r0);
}

}  // namespace gmac
