#include "gmac/two_set_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "gmac/error.hpp"
#include "gmac/one_set_bounds.hpp"

namespace gmac {

const CoordNames& mac_coords() {
  static const CoordNames c{"R0", "R1", "R2"};
  return c;
}

const CoordNames& equivocation_pair_coords() {
  static const CoordNames c{"R1e", "R2e"};
  return c;
}

const CoordNames& two_set_coords() {
  static const CoordNames c{"R0", "R1", "R2", "R1e", "R2e"};
  return c;
}

TwoSetTerms two_set_terms(const SchemeTwoSet& scheme, const ChannelSpec& channel) {
  const auto j = assemble_joint_two_set(scheme, channel);
  TwoSetTerms t;
  t.i1 = mutual_information(j, {"U"}, {"Y"}, {"V", "Q"});
  t.i2 = mutual_information(j, {"V"}, {"Y"}, {"U", "Q"});
  t.i12 = mutual_information(j, {"U", "V"}, {"Y"}, {"Q"});
  t.i0 = mutual_information(j, {"U", "V", "Q"}, {"Y"});
  t.e1 = mutual_information(j, {"U"}, {"Y2"}, {"X2", "V", "Q"});
  t.e2 = mutual_information(j, {"V"}, {"Y1"}, {"X1", "U", "Q"});
  return t;
}

RatePolytope mac_polytope(const TwoSetTerms& t) {
  const auto& c = mac_coords();
  RatePolytope p{c, {}, {}};
  p.le(coefficients(c, {{"R1", 1}}), t.i1)
      .le(coefficients(c, {{"R2", 1}}), t.i2)
      .le(coefficients(c, {{"R1", 1}, {"R2", 1}}), t.i12)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}, {"R2", 1}}), t.i0);
  return p;
}

RatePolytope mac_polytope(const SchemeTwoSet& scheme, const ChannelSpec& channel) {
  return mac_polytope(two_set_terms(scheme, channel));
}

namespace {

void require_rates(double r0, double r1, double r2) {
  for (double r : {r0, r1, r2}) {
    if (!(r >= 0.0) || !std::isfinite(r)) fail(ErrorKind::InvalidInput, "rates must be finite and nonnegative");
  }
}

// The bracketed equivocation bounds, written over a coordinate system that
// contains R1e and R2e and optionally R0, R1, R2 as symbols. When a rate is
// not a coordinate its numeric value is folded into the constant.
struct Brackets {
  const TwoSetTerms& t;
  const CoordNames& coords;
  double r0, r1, r2;  // used only for rates missing from coords

  bool symbolic(const char* name) const {
    return std::find(coords.begin(), coords.end(), name) != coords.end();
  }

  // constant - sum of the named rates
  PositivePartConstraint make(std::vector<double> lhs, double constant,
                              std::initializer_list<const char*> minus) const {
    std::vector<double> rhs(coords.size(), 0.0);
    for (const char* name : minus) {
      if (symbolic(name)) {
        rhs[static_cast<std::size_t>(std::find(coords.begin(), coords.end(), name) - coords.begin())] -= 1.0;
      } else {
        const std::string n(name);
        constant -= n == "R0" ? r0 : n == "R1" ? r1 : r2;
      }
    }
    return {std::move(lhs), snap_rate(constant), std::move(rhs)};
  }

  void user1(std::vector<PositivePartConstraint>& out) const {
    const auto lhs = coefficients(coords, {{"R1e", 1}});
    out.push_back(make(lhs, t.i1 - t.e1, {}));
    out.push_back(make(lhs, t.i12 - t.e1, {"R2"}));
    out.push_back(make(lhs, t.i0 - t.e1, {"R0", "R2"}));
  }
  void user2(std::vector<PositivePartConstraint>& out) const {
    const auto lhs = coefficients(coords, {{"R2e", 1}});
    out.push_back(make(lhs, t.i2 - t.e2, {}));
    out.push_back(make(lhs, t.i12 - t.e2, {"R1"}));
    out.push_back(make(lhs, t.i0 - t.e2, {"R0", "R1"}));
  }
  void sum(std::vector<PositivePartConstraint>& out) const {
    const auto lhs = coefficients(coords, {{"R1e", 1}, {"R2e", 1}});
    out.push_back(make(lhs, t.i12 - t.e1 - t.e2, {}));
    out.push_back(make(lhs, t.i0 - t.e1 - t.e2, {"R0"}));
  }
};

enum class Layer { L1, L2, L3 };

// Appends the pieces of one layer to `region` with provenance 1, 2 or 3.
void add_layer(RateRegion& region, const RatePolytope& base, const Brackets& br, Layer layer) {
  PolytopeTemplate tpl{base, {}};
  const auto& c = base.coords;
  switch (layer) {
    case Layer::L1:
      br.user1(tpl.positive_parts);
      br.user2(tpl.positive_parts);
      br.sum(tpl.positive_parts);
      break;
    case Layer::L2:
      tpl.base.eq(coefficients(c, {{"R2e", 1}}), 0.0);
      br.user1(tpl.positive_parts);
      break;
    case Layer::L3:
      tpl.base.eq(coefficients(c, {{"R1e", 1}}), 0.0);
      br.user2(tpl.positive_parts);
      break;
  }
  auto split = split_positive_parts(tpl);
  for (auto& p : split.pieces) region.add(std::move(p), static_cast<std::size_t>(layer) + 1);
  region.dropped_empty += split.dropped_empty;
}

}  // namespace

RateRegion equivocation_set_explicit(const TwoSetTerms& t, double r0, double r1, double r2) {
  require_rates(r0, r1, r2);
  const auto& c = equivocation_pair_coords();
  RatePolytope base{c, {}, {}};
  base.le(coefficients(c, {{"R1e", 1}}), r1).le(coefficients(c, {{"R2e", 1}}), r2);
  const Brackets br{t, c, r0, r1, r2};
  RateRegion region;
  region.coords = c;
  for (Layer l : {Layer::L1, Layer::L2, Layer::L3}) add_layer(region, base, br, l);
  return region;
}

RateRegion equivocation_set_explicit(const SchemeTwoSet& scheme, const ChannelSpec& channel, double r0,
                                     double r1, double r2) {
  return equivocation_set_explicit(two_set_terms(scheme, channel), r0, r1, r2);
}

std::vector<std::array<double, 2>> equivocation_set_oracle(const TwoSetTerms& t, double r0, double r1,
                                                           double r2, double step) {
  require_rates(r0, r1, r2);
  if (!(step > 0.0) || !std::isfinite(step)) fail(ErrorKind::InvalidInput, "oracle step must be positive");

  // Largest R1' with (R0, R1', R2) achievable; R2' is then taken as large as
  // possible because each rectangle grows with R2'.
  const double r1_max = std::min({t.i1, t.i12 - r2, t.i0 - r0 - r2});
  auto r2_max = [&](double r1p) { return std::min({t.i2, t.i12 - r1p, t.i0 - r0 - r1p}); };
  if (r1_max < r1 - kRateTolerance || r2_max(r1) < r2 - kRateTolerance) return {};
  if (static_cast<double>((r1_max - r1) / step) > 1e7) fail(ErrorKind::GridTooLarge, "oracle grid too large");

  std::vector<std::array<double, 2>> corners;
  auto add_rect = [&](double r1p) {
    const double r2p = r2_max(r1p);
    if (r2p < r2 - kRateTolerance) return;
    corners.push_back({std::min(r1, std::max(0.0, r1p - t.e1)), std::min(r2, std::max(0.0, r2p - t.e2))});
  };
  for (std::size_t k = 0;; ++k) {
    const double r1p = r1 + static_cast<double>(k) * step;
    if (r1p > r1_max) break;
    add_rect(r1p);
  }
  add_rect(std::max(r1, r1_max));

  std::vector<std::array<double, 2>> out = corners;
  double xmax = 0.0;
  for (const auto& c : corners) xmax = std::max(xmax, c[0]);
  for (std::size_t i = 0; static_cast<double>(i) * step <= xmax + 1e-12; ++i) {
    const double x = static_cast<double>(i) * step;
    double top = -1.0;
    for (const auto& c : corners)
      if (c[0] >= x - 1e-12) top = std::max(top, c[1]);
    for (std::size_t j = 0; static_cast<double>(j) * step <= top + 1e-12; ++j) {
      out.push_back({x, static_cast<double>(j) * step});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<double, 2>> equivocation_set_oracle(const SchemeTwoSet& scheme,
                                                           const ChannelSpec& channel, double r0,
                                                           double r1, double r2, double step) {
  return equivocation_set_oracle(two_set_terms(scheme, channel), r0, r1, r2, step);
}

RateRegion two_set_region(const TwoSetTerms& t) {
  const auto& c = two_set_coords();
  RatePolytope base{c, {}, {}};
  base.le(coefficients(c, {{"R1", 1}}), t.i1)
      .le(coefficients(c, {{"R2", 1}}), t.i2)
      .le(coefficients(c, {{"R1", 1}, {"R2", 1}}), t.i12)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}, {"R2", 1}}), t.i0)
      .le(coefficients(c, {{"R1e", 1}, {"R1", -1}}), 0.0)
      .le(coefficients(c, {{"R2e", 1}, {"R2", -1}}), 0.0);
  const Brackets br{t, c, 0.0, 0.0, 0.0};
  RateRegion region;
  region.coords = c;
  for (Layer l : {Layer::L1, Layer::L2, Layer::L3}) add_layer(region, base, br, l);
  if (region.pieces.size() > kMaxTwoSetPieces) {
    fail(ErrorKind::PieceExplosion, "positive-part expansion produced " + std::to_string(region.pieces.size()) +
                                        " pieces");
  }
  return region;
}

RateRegion two_set_region_piece(const SchemeTwoSet& scheme, const ChannelSpec& channel) {
  return two_set_region(two_set_terms(scheme, channel));
}

RateRegion secrecy_inner_region(const TwoSetTerms& t) {
  const auto& c = mac_coords();
  RateRegion region;
  region.coords = c;
  auto push = [&](RatePolytope p, std::size_t source) {
    const bool negative = std::any_of(p.inequalities.begin(), p.inequalities.end(),
                                      [](const LinearConstraint& k) { return k.bound < 0.0; });
    if (negative) {
      ++region.dropped_empty;
    } else {
      region.add(std::move(p), source);
    }
  };
  const double a1 = snap_rate(t.i1 - t.e1), a2 = snap_rate(t.i2 - t.e2);
  RatePolytope s1{c, {}, {}};
  s1.le(coefficients(c, {{"R1", 1}}), a1)
      .le(coefficients(c, {{"R2", 1}}), a2)
      .le(coefficients(c, {{"R1", 1}, {"R2", 1}}), snap_rate(t.i12 - t.e1 - t.e2))
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}, {"R2", 1}}), snap_rate(t.i0 - t.e1 - t.e2));
  push(std::move(s1), 1);
  RatePolytope s2{c, {}, {}};
  s2.eq(coefficients(c, {{"R2", 1}}), 0.0)
      .le(coefficients(c, {{"R1", 1}}), a1)
      .le(coefficients(c, {{"R0", 1}, {"R1", 1}}), snap_rate(t.i0 - t.e1));
  push(std::move(s2), 2);
  RatePolytope s3{c, {}, {}};
  s3.eq(coefficients(c, {{"R1", 1}}), 0.0)
      .le(coefficients(c, {{"R2", 1}}), a2)
      .le(coefficients(c, {{"R0", 1}, {"R2", 1}}), snap_rate(t.i0 - t.e2));
  push(std::move(s3), 3);
  return region;
}

RateRegion secrecy_inner_pieces(const SchemeTwoSet& scheme, const ChannelSpec& channel) {
  return secrecy_inner_region(two_set_terms(scheme, channel));
}

}  // namespace gmac
