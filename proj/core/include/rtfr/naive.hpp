#pragma once

#include <span>

#include "rtfr/backend.hpp"

namespace rtfr {

/// All-pairs repulsion, D(v) = sum over u != v of f_rep(p(v) - p(u), k).
RepulsiveTiming repulsive_naive(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                                unsigned threads = 1);

/// All-pairs repulsion with the 2k cut-off. Reference result for every
/// accelerated backend.
RepulsiveTiming repulsive_naive_cutoff(std::span<const Vec2> positions, double k,
                                       std::span<Vec2> disp, unsigned threads = 1);

}  // namespace rtfr
