#include "rtfr/grid.hpp"

#include <algorithm>
#include <cmath>

#include "accumulate.hpp"
#include "rtfr/error.hpp"
#include "rtfr/forces.hpp"
#include "rtfr/parallel.hpp"
#include "stopwatch.hpp"

namespace rtfr {
namespace {

std::size_t cell_count(double extent, double cell_size) {
  const double cells = std::ceil(extent / cell_size);
  return cells < 1.0 ? 1 : static_cast<std::size_t>(cells);
}

std::size_t clamp_cell(double t, std::size_t dims) {
  if (!(t > 0.0)) return 0;
  const auto c = static_cast<std::size_t>(std::min(t, static_cast<double>(dims - 1)));
  return std::min(c, dims - 1);
}

}  // namespace

std::pair<std::size_t, std::size_t> UniformGrid::cell_of(Vec2 p) const noexcept {
  return {clamp_cell(std::floor((p.x - origin.x) / cell_size), nx),
          clamp_cell(std::floor((p.y - origin.y) / cell_size), ny)};
}

UniformGrid build_grid(std::span<const Vec2> positions, double cutoff_radius) {
  if (!(cutoff_radius > 0.0)) throw InvalidArgument("grid cell size must be positive");
  UniformGrid grid;
  grid.cell_size = cutoff_radius;
  if (!positions.empty()) {
    const Aabb box = bounds_of(positions);
    grid.origin = box.min;
    grid.nx = cell_count(box.width(), cutoff_radius);
    grid.ny = cell_count(box.height(), cutoff_radius);
  }

  // Counting sort into CSR buckets; iterating ids ascending keeps buckets sorted.
  std::vector<std::size_t> cell(positions.size());
  grid.cell_start.assign(grid.nx * grid.ny + 1, 0);
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const auto [ix, iy] = grid.cell_of(positions[v]);
    cell[v] = iy * grid.nx + ix;
    ++grid.cell_start[cell[v] + 1];
  }
  for (std::size_t c = 1; c < grid.cell_start.size(); ++c) {
    grid.cell_start[c] += grid.cell_start[c - 1];
  }
  grid.ids.resize(positions.size());
  std::vector<std::size_t> cursor(grid.cell_start.begin(), grid.cell_start.end() - 1);
  for (std::size_t v = 0; v < positions.size(); ++v) {
    grid.ids[cursor[cell[v]]++] = static_cast<VertexId>(v);
  }
  return grid;
}

void grid_gather(const UniformGrid& grid, std::span<const Vec2> positions, VertexId q,
                 std::vector<VertexId>& out) {
  const std::size_t first = out.size();
  const Vec2 pq = positions[q];
  const double r2 = grid.cell_size * grid.cell_size;
  const auto [cx, cy] = grid.cell_of(pq);
  const std::size_t x0 = cx == 0 ? 0 : cx - 1;
  const std::size_t y0 = cy == 0 ? 0 : cy - 1;
  const std::size_t x1 = std::min(cx + 1, grid.nx - 1);
  const std::size_t y1 = std::min(cy + 1, grid.ny - 1);
  for (std::size_t iy = y0; iy <= y1; ++iy) {
    for (std::size_t ix = x0; ix <= x1; ++ix) {
      for (VertexId u : grid.bucket(ix, iy)) {
        if (u != q && length_squared(positions[u] - pq) < r2) out.push_back(u);
      }
    }
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

RepulsiveTiming repulsive_grid(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                               unsigned threads) {
  RepulsiveTiming timing;
  detail::Stopwatch clock;
  const UniformGrid grid = build_grid(positions, cutoff_radius(k));
  timing.build_ms = clock.lap_ms();

  parallel_for(positions.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<VertexId> neighbors;
    for (std::size_t v = begin; v < end; ++v) {
      neighbors.clear();
      grid_gather(grid, positions, static_cast<VertexId>(v), neighbors);
      detail::accumulate_neighbors(positions, static_cast<VertexId>(v), neighbors, k, disp);
    }
  });
  timing.traversal_ms = clock.lap_ms();
  return timing;
}

}  // namespace rtfr
