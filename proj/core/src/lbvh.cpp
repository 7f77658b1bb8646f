#include "rtfr/lbvh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "accumulate.hpp"
#include "rtfr/error.hpp"
#include "rtfr/forces.hpp"
#include "rtfr/parallel.hpp"
#include "stopwatch.hpp"
#include "traversal_stack.hpp"

namespace rtfr {
namespace {

std::uint32_t quantize_axis(double v, double lo, double hi) noexcept {
  const double extent = hi - lo;
  if (!(extent > 0.0)) return 0;
  const double q = std::floor((v - lo) / extent * 65535.0);
  if (!(q > 0.0)) return 0;
  if (q >= 65535.0) return 65535;
  return static_cast<std::uint32_t>(q);
}

// Length of the common key prefix of sorted slots i and j, or -1 when j is out
// of range. Equal codes fall back to the slot indices, which makes all keys
// distinct (the sort already ordered equal codes by primitive id).
class PrefixLength {
 public:
  explicit PrefixLength(std::span<const std::uint32_t> codes) noexcept : codes_(codes) {}

  int operator()(std::int64_t i, std::int64_t j) const noexcept {
    if (j < 0 || j >= static_cast<std::int64_t>(codes_.size())) return -1;
    const std::uint32_t a = codes_[static_cast<std::size_t>(i)];
    const std::uint32_t b = codes_[static_cast<std::size_t>(j)];
    if (a != b) return std::countl_zero(a ^ b);
    return 32 + std::countl_zero(static_cast<std::uint64_t>(i ^ j));
  }

 private:
  std::span<const std::uint32_t> codes_;
};

// Karras 2012: the key range and split position of internal node i.
void build_internal_node(const PrefixLength& delta, std::int64_t i, std::vector<LbvhNode>& nodes) {
  const int d = (delta(i, i + 1) - delta(i, i - 1)) >= 0 ? 1 : -1;

  const int delta_min = delta(i, i - d);
  std::int64_t l_max = 2;
  while (delta(i, i + l_max * d) > delta_min) l_max *= 2;

  std::int64_t l = 0;
  for (std::int64_t t = l_max / 2; t >= 1; t /= 2) {
    if (delta(i, i + (l + t) * d) > delta_min) l += t;
  }
  const std::int64_t j = i + l * d;

  const int delta_node = delta(i, j);
  std::int64_t s = 0;
  for (std::int64_t div = 2;; div *= 2) {
    const std::int64_t t = (l + div - 1) / div;
    if (delta(i, i + (s + t) * d) > delta_node) s += t;
    if (t == 1) break;
  }
  const std::int64_t split = i + s * d + std::min(d, 0);

  const std::int64_t lo = std::min(i, j);
  const std::int64_t hi = std::max(i, j);
  LbvhNode& node = nodes[static_cast<std::size_t>(i)];
  node.left = lo == split ? leaf_ref(static_cast<std::uint32_t>(split))
                          : static_cast<NodeRef>(split);
  node.right = hi == split + 1 ? leaf_ref(static_cast<std::uint32_t>(split + 1))
                               : static_cast<NodeRef>(split + 1);
}


}  // namespace

Quantized quantize16(Vec2 p, const Aabb& world) noexcept {
  return {quantize_axis(p.x, world.min.x, world.max.x),
          quantize_axis(p.y, world.min.y, world.max.y)};
}

Aabb morton_world(std::span<const Vec2> points) noexcept {
  Aabb world = bounds_of(points);
  if (world.empty()) return Aabb{{0.0, 0.0}, {1.0, 1.0}};
  const double gx = world.width() > 0.0 ? 1e-6 * world.width() : 1e-6;
  const double gy = world.height() > 0.0 ? 1e-6 * world.height() : 1e-6;
  world.min.x -= gx;
  world.max.x += gx;
  world.min.y -= gy;
  world.max.y += gy;
  return world;
}

Lbvh build_lbvh(std::span<const Vec2> centroids, std::span<const Aabb> boxes, const Aabb& world) {
  const std::size_t n = centroids.size();
  if (n == 0) throw InvalidArgument("BVH needs at least one primitive");
  if (boxes.size() != n) throw InvalidArgument("one box per centroid required");
  if (n >= kLeafFlag) throw InvalidArgument("too many primitives for 31-bit node refs");

  Lbvh bvh;
  std::vector<std::uint32_t> raw_codes(n);
  for (std::size_t i = 0; i < n; ++i) raw_codes[i] = morton_encode(centroids[i], world);

  bvh.order.resize(n);
  std::iota(bvh.order.begin(), bvh.order.end(), std::uint32_t{0});
  std::sort(bvh.order.begin(), bvh.order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return raw_codes[a] != raw_codes[b] ? raw_codes[a] < raw_codes[b] : a < b;
  });
  bvh.codes.resize(n);
  bvh.leaf_bounds.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    bvh.codes[s] = raw_codes[bvh.order[s]];
    bvh.leaf_bounds[s] = boxes[bvh.order[s]];
  }

  if (n == 1) {
    bvh.root = leaf_ref(0);
    return bvh;
  }

  const auto count = static_cast<std::int64_t>(n);
  bvh.internal.resize(n - 1);
  const PrefixLength delta(bvh.codes);
  for (std::int64_t i = 0; i < count - 1; ++i) build_internal_node(delta, i, bvh.internal);
  bvh.root = 0;

  // Bottom-up boxes: a node is finished by whichever child arrives second.
  constexpr std::uint32_t none = 0xFFFF'FFFFu;
  std::vector<std::uint32_t> leaf_parent(n, none);
  std::vector<std::uint32_t> node_parent(n - 1, none);
  for (std::uint32_t i = 0; i < n - 1; ++i) {
    for (NodeRef child : {bvh.internal[i].left, bvh.internal[i].right}) {
      (is_leaf(child) ? leaf_parent[ref_index(child)] : node_parent[child]) = i;
    }
  }
  std::vector<std::uint8_t> arrivals(n - 1, 0);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint32_t node = leaf_parent[s];
    while (node != none && ++arrivals[node] == 2) {
      LbvhNode& in = bvh.internal[node];
      in.bounds = bvh.bounds(in.left);
      in.bounds.expand(bvh.bounds(in.right));
      node = node_parent[node];
    }
  }
  return bvh;
}

Lbvh build_point_lbvh(std::span<const Vec2> points) {
  std::vector<Aabb> boxes(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) boxes[i] = Aabb{points[i], points[i]};
  return build_lbvh(points, boxes, morton_world(points));
}

LbvhCheck validate_lbvh(const Lbvh& bvh, std::span<const Aabb> boxes) {
  LbvhCheck check;
  auto fail = [&](std::string msg) { check.violations.push_back(std::move(msg)); };
  const std::size_t n = bvh.order.size();

  if (n == 0) {
    fail("empty tree");
    return check;
  }
  if (boxes.size() != n) fail("primitive count mismatch");
  const std::size_t expected_internal = n - 1;
  if (bvh.internal.size() != expected_internal) {
    fail("internal count " + std::to_string(bvh.internal.size()) + " != n-1 = " +
         std::to_string(expected_internal));
  }

  std::vector<std::uint8_t> primitive_seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto id = bvh.order[s];
    if (id >= n || primitive_seen[id]++) fail("slot " + std::to_string(s) + " repeats a primitive");
    else if (id < boxes.size() && !(bvh.leaf_bounds[s] == boxes[id]))
      fail("leaf box of primitive " + std::to_string(id) + " differs from its input box");
  }

  std::vector<std::uint32_t> leaf_visits(n, 0);
  std::vector<std::uint32_t> node_visits(bvh.internal.size(), 0);
  struct Item {
    NodeRef ref;
    std::size_t depth;
  };
  std::vector<Item> stack{{bvh.root, 0}};
  std::size_t steps = 0;
  const std::size_t step_limit = 4 * n + 4;
  while (!stack.empty()) {
    if (++steps > step_limit) {
      fail("traversal does not terminate (cycle)");
      break;
    }
    const Item item = stack.back();
    stack.pop_back();
    check.max_depth = std::max(check.max_depth, item.depth);
    if (is_leaf(item.ref)) {
      const auto slot = ref_index(item.ref);
      if (slot >= n) fail("leaf ref out of range");
      else ++leaf_visits[slot];
      continue;
    }
    if (item.ref >= bvh.internal.size()) {
      fail("internal ref out of range");
      continue;
    }
    if (node_visits[item.ref]++ > 0) continue;
    const LbvhNode& node = bvh.internal[item.ref];
    for (NodeRef child : {node.left, node.right}) {
      const bool valid = is_leaf(child) ? ref_index(child) < n : child < bvh.internal.size();
      if (valid && !node.bounds.contains(bvh.bounds(child))) {
        fail("node " + std::to_string(item.ref) + " does not contain its child");
      }
      stack.push_back({child, item.depth + 1});
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (leaf_visits[s] != 1) {
      fail("leaf " + std::to_string(s) + " reached " + std::to_string(leaf_visits[s]) + " times");
    }
  }
  for (std::size_t i = 0; i < node_visits.size(); ++i) {
    if (node_visits[i] != 1) {
      fail("node " + std::to_string(i) + " reached " + std::to_string(node_visits[i]) + " times");
    }
  }
  return check;
}

void radius_gather(const Lbvh& bvh, std::span<const Vec2> positions, VertexId q, double r,
                   std::vector<VertexId>& out, TraversalStats* stats) {
  const std::size_t first = out.size();
  const Vec2 pq = positions[q];
  const double r2 = r * r;
  const Aabb query = square_around(pq, r);
  std::size_t visited = 0;

  auto test_leaf = [&](NodeRef leaf) {
    const std::uint32_t u = bvh.order[ref_index(leaf)];
    if (u != q && length_squared(positions[u] - pq) < r2) out.push_back(u);
  };

  detail::TraversalStack stack;
  if (bvh.bounds(bvh.root).overlaps(query)) stack.push(bvh.root);
  while (!stack.empty()) {
    const NodeRef ref = stack.pop();
    ++visited;
    if (is_leaf(ref)) {
      test_leaf(ref);
      continue;
    }
    const LbvhNode& node = bvh.internal[ref];
    if (bvh.bounds(node.right).overlaps(query)) stack.push(node.right);
    if (bvh.bounds(node.left).overlaps(query)) stack.push(node.left);
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  if (stats) stats->visited_nodes += visited;
}

RepulsiveTiming repulsive_lbvh(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                               unsigned threads) {
  RepulsiveTiming timing;
  detail::Stopwatch clock;
  const Lbvh bvh = build_point_lbvh(positions);
  timing.build_ms = clock.lap_ms();

  const double r = cutoff_radius(k);
  parallel_for(positions.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<VertexId> neighbors;
    for (std::size_t v = begin; v < end; ++v) {
      neighbors.clear();
      radius_gather(bvh, positions, static_cast<VertexId>(v), r, neighbors);
      detail::accumulate_neighbors(positions, static_cast<VertexId>(v), neighbors, k, disp);
    }
  });
  timing.traversal_ms = clock.lap_ms();
  return timing;
}

}  // namespace rtfr
