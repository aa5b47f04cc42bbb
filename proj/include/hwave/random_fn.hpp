#pragma once

#include <cstdint>
#include <random>

#include "hwave/heis.hpp"
#include "hwave/line_fn.hpp"
#include "hwave/spectral_set.hpp"

namespace hwave {

/// Seeded generators shared by the property suites and the CLI so every
/// randomized run is reproducible from a single integer.
std::mt19937_64 make_rng(std::uint64_t seed);

GroupElement random_group_element(std::mt19937_64& rng, double range = 5.0);

/// Contiguous random segments on a subinterval of [t_lo, t_hi] with
/// complex amplitudes in the unit disc annulus and frequencies in
/// [-omega_max, omega_max].
PiecewiseExpFunction random_piecewise_fn(std::mt19937_64& rng, int segments = 3,
                                         double t_lo = -2.0, double t_hi = 2.0,
                                         double omega_max = 3.0);

/// Restriction to `set` of a short sum of exponentials with non-integer
/// frequencies; smooth on the set but with an infinite character tail.
PiecewiseExpFunction random_band_fn(std::mt19937_64& rng, const IntervalUnion& set,
                                    int terms = 3);

}  // namespace hwave
