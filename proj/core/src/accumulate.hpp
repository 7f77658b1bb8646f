#pragma once

#include <span>
#include <vector>

#include "rtfr/forces.hpp"

namespace rtfr::detail {

/// Sums cut-off repulsion on v over `neighbors` (ascending ids) into disp[v].
inline void accumulate_neighbors(std::span<const Vec2> positions, VertexId v,
                                 std::span<const VertexId> neighbors, double k,
                                 std::span<Vec2> disp) noexcept {
  const Vec2 pv = positions[v];
  Vec2 acc = disp[v];
  for (VertexId u : neighbors) acc += repulsion_cutoff(pv, positions[u], v, u, k);
  disp[v] = acc;
}

}  // namespace rtfr::detail
