#include "rtfr/rayquery.hpp"

#include <algorithm>

#include "accumulate.hpp"
#include "rtfr/error.hpp"
#include "rtfr/forces.hpp"
#include "rtfr/parallel.hpp"
#include "stopwatch.hpp"
#include "traversal_stack.hpp"

namespace rtfr {

DiscBvh build_disc_bvh(std::span<const Vec2> centers, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("disc radius must be positive");
  std::vector<Aabb> boxes(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) boxes[i] = square_around(centers[i], radius);
  return DiscBvh{build_lbvh(centers, boxes, morton_world(centers)), radius};
}

void point_query(const DiscBvh& discs, std::span<const Vec2> centers, Vec2 origin,
                 VertexId self_id, std::vector<VertexId>& out, TraversalStats* stats) {
  const Lbvh& bvh = discs.bvh;
  const std::size_t first = out.size();
  const double r2 = discs.radius * discs.radius;
  std::size_t visited = 0;

  detail::TraversalStack stack;
  if (bvh.bounds(bvh.root).contains(origin)) stack.push(bvh.root);
  while (!stack.empty()) {
    const NodeRef ref = stack.pop();
    ++visited;
    if (is_leaf(ref)) {
      // Intersection program: exact distance to the disc center.
      const std::uint32_t u = bvh.order[ref_index(ref)];
      if (u != self_id && length_squared(origin - centers[u]) < r2) out.push_back(u);
      continue;
    }
    const LbvhNode& node = bvh.internal[ref];
    if (bvh.bounds(node.right).contains(origin)) stack.push(node.right);
    if (bvh.bounds(node.left).contains(origin)) stack.push(node.left);
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  if (stats) stats->visited_nodes += visited;
}

RepulsiveTiming repulsive_rayquery(std::span<const Vec2> positions, double k,
                                   std::span<Vec2> disp, unsigned threads) {
  RepulsiveTiming timing;
  detail::Stopwatch clock;
  const DiscBvh discs = build_disc_bvh(positions, cutoff_radius(k));
  timing.build_ms = clock.lap_ms();

  parallel_for(positions.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<VertexId> hits;
    for (std::size_t v = begin; v < end; ++v) {
      hits.clear();
      point_query(discs, positions, positions[v], static_cast<VertexId>(v), hits);
      detail::accumulate_neighbors(positions, static_cast<VertexId>(v), hits, k, disp);
    }
  });
  timing.traversal_ms = clock.lap_ms();
  return timing;
}

}  // namespace rtfr
