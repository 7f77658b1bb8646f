#pragma once

#include <span>
#include <vector>

#include "rtfr/lbvh.hpp"

namespace rtfr {

/// BVH over one disc of radius `radius` per vertex.
///
/// Morton keys come from the disc centers in the same world box as the point
/// tree, so both trees share a topology. Leaf boxes are the discs' bounding
/// squares with endpoints rounded outward by one ulp.
struct DiscBvh {
  Lbvh bvh;
  double radius = 0.0;
};

DiscBvh build_disc_bvh(std::span<const Vec2> centers, double radius);

/// Ids of discs u != self_id whose center lies strictly within `radius` of
/// `origin`, appended ascending. Traversal only enters nodes whose box
/// contains the origin, i.e. an epsilon ray cast from `origin`.
void point_query(const DiscBvh& discs, std::span<const Vec2> centers, Vec2 origin,
                 VertexId self_id, std::vector<VertexId>& out, TraversalStats* stats = nullptr);

/// Repulsion by scatter: every vertex owns a 2k disc, and each vertex sums the
/// forces of the discs covering its own position.
RepulsiveTiming repulsive_rayquery(std::span<const Vec2> positions, double k,
                                   std::span<Vec2> disp, unsigned threads = 1);

}  // namespace rtfr
