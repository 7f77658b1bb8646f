#include "rtfr/forces.hpp"

#include <algorithm>
#include <numbers>

namespace rtfr {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double compute_k(std::span<const Vec2> positions) {
  const std::size_t n = std::max<std::size_t>(positions.size(), 1);
  double width = kMinBoxExtent;
  double height = kMinBoxExtent;
  if (!positions.empty()) {
    const Aabb box = bounds_of(positions);
    width = std::max(box.width(), kMinBoxExtent);
    height = std::max(box.height(), kMinBoxExtent);
  }
  return std::sqrt(width * height / static_cast<double>(n));
}

Vec2 pair_jitter_direction(VertexId a, VertexId b) noexcept {
  const auto lo = std::min(a, b);
  const auto hi = std::max(a, b);
  const std::uint64_t h = splitmix64((static_cast<std::uint64_t>(lo) << 32) | hi);
  const double angle = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  return {std::cos(angle), std::sin(angle)};
}

void attractive_phase(const Graph& g, std::span<const Vec2> positions, double k,
                      std::span<Vec2> disp) {
  for (const Edge& e : g.edges()) {
    const Vec2 force = f_att(positions[e.second] - positions[e.first], k);
    disp[e.second] -= force;
    disp[e.first] += force;
  }
}

void displace(std::span<Vec2> positions, std::span<const Vec2> disp, double t) {
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const Vec2 d = disp[v];
    if (d.x == 0.0 && d.y == 0.0) continue;
    double len = length(d);
    Vec2 unit;
    if (std::isfinite(len)) {
      unit = {d.x / len, d.y / len};
    } else {
      // |d| overflowed; rescale before normalizing.
      const double m = std::max(std::abs(d.x), std::abs(d.y));
      const Vec2 scaled{d.x / m, d.y / m};
      const double scaled_len = length(scaled);
      unit = {scaled.x / scaled_len, scaled.y / scaled_len};
      len = std::numeric_limits<double>::infinity();
    }
    if (!is_finite(unit)) continue;
    const double step = std::min(len, t);
    positions[v] += unit * step;
  }
}

}  // namespace rtfr
