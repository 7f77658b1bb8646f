#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rtfr/backend.hpp"
#include "rtfr/graph.hpp"

namespace rtfr {

// ---------------------------------------------------------------------------
// Morton codes: 16 bits per axis, x on even bits, y on odd bits.
// ---------------------------------------------------------------------------

constexpr std::uint32_t spread_bits16(std::uint32_t v) noexcept {
  v &= 0x0000FFFFu;
  v = (v | (v << 8)) & 0x00FF00FFu;
  v = (v | (v << 4)) & 0x0F0F0F0Fu;
  v = (v | (v << 2)) & 0x33333333u;
  v = (v | (v << 1)) & 0x55555555u;
  return v;
}

constexpr std::uint32_t compact_bits16(std::uint32_t v) noexcept {
  v &= 0x55555555u;
  v = (v | (v >> 1)) & 0x33333333u;
  v = (v | (v >> 2)) & 0x0F0F0F0Fu;
  v = (v | (v >> 4)) & 0x00FF00FFu;
  v = (v | (v >> 8)) & 0x0000FFFFu;
  return v;
}

constexpr std::uint32_t interleave16(std::uint32_t qx, std::uint32_t qy) noexcept {
  return spread_bits16(qx) | (spread_bits16(qy) << 1);
}

struct Quantized {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend bool operator==(const Quantized&, const Quantized&) noexcept = default;
};

constexpr Quantized deinterleave16(std::uint32_t code) noexcept {
  return {compact_bits16(code), compact_bits16(code >> 1)};
}

/// floor((p - min) / extent * 65535) per axis, clamped to [0, 65535]. A
/// zero-extent axis quantizes to 0.
Quantized quantize16(Vec2 p, const Aabb& world) noexcept;

inline std::uint32_t morton_encode(Vec2 p, const Aabb& world) noexcept {
  const Quantized q = quantize16(p, world);
  return interleave16(q.x, q.y);
}

/// Bounding box of the points, each side grown by 1e-6 of its extent (or by
/// 1e-6 when the extent is zero).
Aabb morton_world(std::span<const Vec2> points) noexcept;

// ---------------------------------------------------------------------------
// Karras radix tree
// ---------------------------------------------------------------------------

/// Child reference: internal node index, or sorted leaf slot with kLeafFlag set.
using NodeRef = std::uint32_t;
inline constexpr NodeRef kLeafFlag = 0x8000'0000u;

constexpr bool is_leaf(NodeRef r) noexcept { return (r & kLeafFlag) != 0; }
constexpr std::uint32_t ref_index(NodeRef r) noexcept { return r & ~kLeafFlag; }
constexpr NodeRef leaf_ref(std::uint32_t slot) noexcept { return slot | kLeafFlag; }

/// Fixed traversal stack budget; exceeding it raises StackOverflow.
inline constexpr std::size_t kTraversalStackDepth = 64;

struct LbvhNode {
  NodeRef left = 0;
  NodeRef right = 0;
  Aabb bounds;
};

struct Lbvh {
  /// order[slot] = primitive id, slots sorted by (Morton code, id).
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> codes;
  std::vector<Aabb> leaf_bounds;  // per slot
  std::vector<LbvhNode> internal;
  NodeRef root = leaf_ref(0);

  [[nodiscard]] std::size_t primitive_count() const noexcept { return order.size(); }
  [[nodiscard]] const Aabb& bounds(NodeRef r) const noexcept {
    return is_leaf(r) ? leaf_bounds[ref_index(r)] : internal[r].bounds;
  }
};

/// Builds the tree over primitives with Morton keys taken from `centroids`
/// (quantized in `world`) and bounding boxes `boxes`. Needs >= 1 primitive.
Lbvh build_lbvh(std::span<const Vec2> centroids, std::span<const Aabb> boxes, const Aabb& world);

/// Point primitives quantized in morton_world(points).
Lbvh build_point_lbvh(std::span<const Vec2> points);

struct LbvhCheck {
  std::vector<std::string> violations;
  std::size_t max_depth = 0;  // root has depth 0

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Checks internal count = n - 1, leaf/primitive bijection, parent boxes
/// containing child boxes, leaf boxes equal to `boxes`, and that every node
/// is reached exactly once from the root.
LbvhCheck validate_lbvh(const Lbvh& bvh, std::span<const Aabb> boxes);

struct TraversalStats {
  std::size_t visited_nodes = 0;
};

/// Appends { u != q : |p(u) - p(q)|^2 < r^2 } to `out`, ascending. Subtrees
/// are skipped when their box misses the square enclosing the query disc.
void radius_gather(const Lbvh& bvh, std::span<const Vec2> positions, VertexId q, double r,
                   std::vector<VertexId>& out, TraversalStats* stats = nullptr);

RepulsiveTiming repulsive_lbvh(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                               unsigned threads = 1);

}  // namespace rtfr
