#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rtfr/backend.hpp"
#include "rtfr/graph.hpp"

namespace rtfr {

/// Uniform bucket grid over the layout bounding box.
struct UniformGrid {
  double cell_size = 0.0;
  Vec2 origin;
  std::size_t nx = 1;
  std::size_t ny = 1;
  /// CSR buckets: ids of cell c are ids[cell_start[c] .. cell_start[c+1]),
  /// ascending. Cells are row-major, c = iy * nx + ix.
  std::vector<std::size_t> cell_start;
  std::vector<VertexId> ids;

  [[nodiscard]] std::pair<std::size_t, std::size_t> cell_of(Vec2 p) const noexcept;
  [[nodiscard]] std::span<const VertexId> bucket(std::size_t ix, std::size_t iy) const noexcept {
    const std::size_t c = iy * nx + ix;
    return {ids.data() + cell_start[c], ids.data() + cell_start[c + 1]};
  }
};

/// cell_size = cutoff_radius; dims = ceil(extent / cell_size), at least 1.
UniformGrid build_grid(std::span<const Vec2> positions, double cutoff_radius);

/// Ids u != q with |p(u) - p(q)|^2 < cell_size^2 from the 3x3 block around
/// q's cell, appended to `out` in ascending order.
void grid_gather(const UniformGrid& grid, std::span<const Vec2> positions, VertexId q,
                 std::vector<VertexId>& out);

RepulsiveTiming repulsive_grid(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                               unsigned threads = 1);

}  // namespace rtfr
