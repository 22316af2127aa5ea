#pragma once

#include <optional>

#include "gmac/channel.hpp"
#include "gmac/infotheory.hpp"
#include "gmac/regions.hpp"

// Rate regions for the GMAC where only user 1 has confidential messages:
// coordinates (R0, R1, Re) for rate-equivocation, (R0, R1) for perfect secrecy.
namespace gmac {

const CoordNames& equivocation_coords();  // {"R0", "R1", "Re"}
const CoordNames& secrecy_coords();       // {"R0", "R1"}

// a = I(U;Y|X2,Q), b = I(U,X2,Q;Y), d = I(U;Y2|X2,Q).
struct OneSetTerms {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
};
OneSetTerms one_set_terms(const SchemeOneSet& scheme, const ChannelSpec& channel);

// r1 = I(U;Y|X2,V); a, b, d as for the inner bound.
struct OuterTerms {
  double r1 = 0.0;
  OneSetTerms base;
};
OuterTerms outer_terms(const SchemeOneSetOuter& scheme, const ChannelSpec& channel);

// a = I(X1;Y|X2,Q), b = I(X1,X2;Y), d = I(X1;Y2|X2,Q).
using DegradedTerms = OneSetTerms;
DegradedTerms degraded_terms(const SchemeDegraded& scheme, const ChannelSpec& channel);

// Differences within kRateNoiseFloor of zero are snapped to zero so that
// exact-zero cases (e.g. a fully leaking eavesdropper) stay exact.
double snap_rate(double x);

PolytopeTemplate inner_template(const OneSetTerms& t);
RateRegion inner_region(const OneSetTerms& t);
RateRegion inner_polytope(const SchemeOneSet& scheme, const ChannelSpec& channel);

// Printed form without clipping; the single piece may be empty, in which case
// the region has no pieces and dropped_empty == 1.
RateRegion outer_region(const OuterTerms& t);
RateRegion outer_polytope(const SchemeOneSetOuter& scheme, const ChannelSpec& channel);

// R1 <= a - d, R0 + R1 <= b - d. No piece when a - d < 0 or b - d < 0.
RateRegion secrecy_region(const OneSetTerms& t);
RateRegion secrecy_polytope(const SchemeOneSet& scheme, const ChannelSpec& channel);

// max(0, min(a - d, b - d - R0)); InvalidInput for R0 < 0.
double secrecy_capacity_from_terms(const OneSetTerms& t, double r0);
double secrecy_capacity_value(const SchemeOneSet& scheme, const ChannelSpec& channel, double r0);

// Degraded-channel region (no clipping). When `verdict` is not supplied the
// channel is classified here; a non-degraded channel gets a warning attached.
RateRegion degraded_region(const DegradedTerms& t);
RateRegion degraded_polytope(const SchemeDegraded& scheme, const ChannelSpec& channel,
                             std::optional<Degradedness> verdict = std::nullopt);
RateRegion degraded_secrecy_polytope(const SchemeDegraded& scheme, const ChannelSpec& channel);
double degraded_secrecy_capacity_value(const SchemeDegraded& scheme, const ChannelSpec& channel,
                                       double r0);

inline constexpr const char* kNotDegradedWarning =
    "NotDegradedWarning: channel is not certified degraded; the region is not a capacity result";

}  // namespace gmac
