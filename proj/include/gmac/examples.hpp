#pragma once

#include "gmac/channel.hpp"

// Small named channels used by tests, fixtures and documentation.
namespace gmac::examples {

// Binary inputs, Y = (X1, X2) noiseless (|Y| = 4, y = 2 x1 + x2); Y1, Y2 constant.
ChannelSpec clean_mac();

// Y = (X1, X2) noiseless and Y2 = Y.
ChannelSpec eavesdropper_copy();

// Y = (X1, X2) noiseless, Y2 = X1, Y1 = X2.
ChannelSpec leaky_mac();

// Y = X1 xor X2 xor Bern(p_main), Y2 = Y xor Bern(p_wiretap), Y1 constant.
ChannelSpec binary_degraded(double p_main = 0.1, double p_wiretap = 0.1);

// As binary_degraded but Y2 is a fair coin independent of everything.
ChannelSpec binary_pure_noise_wiretap(double p_main = 0.1);

// |X2| = 1: Y = X1 through BSC(p_main), Y2 = X1 through an independent BSC(p_wiretap).
ChannelSpec binary_wiretap(double p_main, double p_wiretap);

// Y = X1 through BSC(p); Y2 is an independent draw from BSC(p * (1 - q) + (1 - p) * q):
// stochastically degraded (through BSC(q)) but not physically.
ChannelSpec independent_wiretap_copy(double p = 0.1, double q = 0.2);

// Binary GMAC with two-sided leakage: Y = X1 xor X2 xor Bern(p_main),
// Y1 = X2 xor Bern(p_leak), Y2 = X1 xor Bern(p_leak), independent given the inputs.
ChannelSpec binary_leaky_gmac(double p_main = 0.05, double p_leak = 0.25);

// Y = X1 xor X2 xor Bern(p_main), Y2 = X1 noiseless: the wiretapper sees more
// of user 1 than the destination does, so the channel is not degraded.
ChannelSpec noiseless_wiretapper(double p_main = 0.3);

}  // namespace gmac::examples
