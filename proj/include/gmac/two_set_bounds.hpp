#pragma once

#include <array>
#include <vector>

#include "gmac/channel.hpp"
#include "gmac/infotheory.hpp"
#include "gmac/regions.hpp"

// Regions for the GMAC where both users send confidential messages.
namespace gmac {

const CoordNames& mac_coords();              // {"R0", "R1", "R2"}
const CoordNames& equivocation_pair_coords();  // {"R1e", "R2e"}
const CoordNames& two_set_coords();          // {"R0", "R1", "R2", "R1e", "R2e"}

inline constexpr std::size_t kMaxTwoSetPieces = 64;

struct TwoSetTerms {
  double i1 = 0.0;   // I(U;Y|V,Q)
  double i2 = 0.0;   // I(V;Y|U,Q)
  double i12 = 0.0;  // I(U,V;Y|Q)
  double i0 = 0.0;   // I(U,V,Q;Y)
  double e1 = 0.0;   // I(U;Y2|X2,V,Q), leakage of user 1's message to user 2
  double e2 = 0.0;   // I(V;Y1|X1,U,Q), leakage of user 2's message to user 1
};
TwoSetTerms two_set_terms(const SchemeTwoSet& scheme, const ChannelSpec& channel);

RatePolytope mac_polytope(const TwoSetTerms& t);
RatePolytope mac_polytope(const SchemeTwoSet& scheme, const ChannelSpec& channel);

// Union of the three explicit pieces L1, L2 (R2e = 0), L3 (R1e = 0) at fixed
// (R0, R1, R2). InvalidInput for negative rates.
RateRegion equivocation_set_explicit(const TwoSetTerms& t, double r0, double r1, double r2);
RateRegion equivocation_set_explicit(const SchemeTwoSet& scheme, const ChannelSpec& channel, double r0,
                                     double r1, double r2);

// Brute-force evaluation of the union definition: (R1', R2') ranges over MAC
// rates with R1' >= R1, R2' >= R2 and (R0, R1', R2') achievable, R1' on a
// `step` grid anchored at R1 (plus its exact maximum). Returns the union's
// points on the step grid together with every rectangle corner. Empty when
// (R0, R1, R2) itself is not achievable.
std::vector<std::array<double, 2>> equivocation_set_oracle(const TwoSetTerms& t, double r0, double r1,
                                                           double r2, double step = 0.01);
std::vector<std::array<double, 2>> equivocation_set_oracle(const SchemeTwoSet& scheme,
                                                           const ChannelSpec& channel, double r0,
                                                           double r1, double r2, double step = 0.01);

// Five-dimensional rate-equivocation pieces. Throws PieceExplosion past
// kMaxTwoSetPieces.
RateRegion two_set_region(const TwoSetTerms& t);
RateRegion two_set_region_piece(const SchemeTwoSet& scheme, const ChannelSpec& channel);

// Perfect-secrecy inner pieces R_s1, R_s2 (R2 = 0), R_s3 (R1 = 0) in (R0, R1, R2);
// pieces with a negative bound are dropped. Provenance is 1, 2, 3.
RateRegion secrecy_inner_region(const TwoSetTerms& t);
RateRegion secrecy_inner_pieces(const SchemeTwoSet& scheme, const ChannelSpec& channel);

}  // namespace gmac
