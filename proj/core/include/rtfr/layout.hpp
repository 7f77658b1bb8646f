#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rtfr/geometry.hpp"
#include "rtfr/graph.hpp"

namespace rtfr {

/// Per-vertex positions, indexed by vertex id.
using Layout = std::vector<Vec2>;

/// Per-vertex accumulated displacement for one iteration.
using DispersionBuffer = std::vector<Vec2>;

/// Uniform i.i.d. positions in [0, extent)^2.
///
/// Coordinates come from std::mt19937_64 (fully specified by the standard)
/// mapped as (word >> 11) * 2^-53 * extent, x before y per vertex, so the
/// same seed yields the same layout on every platform.
Layout init_layout(std::size_t vertex_count, double extent, std::uint64_t seed);
Layout init_layout(const Graph& g, double extent, std::uint64_t seed);

bool all_finite(const Layout& layout) noexcept;

/// CSV "id,x,y" with shortest round-trip float formatting.
void write_layout_csv(std::ostream& out, const Layout& layout);
Layout read_layout_csv(std::istream& in);

}  // namespace rtfr
