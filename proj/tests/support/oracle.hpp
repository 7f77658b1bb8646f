#pragma once

// Brute-force reference computations, written directly from the force
// definitions and kept free of any library code path they are compared with.

#include <cmath>
#include <cstdint>
#include <vector>

#include "rtfr/geometry.hpp"

namespace rtfr::testing {

/// { u != q : |p(u) - p(q)| < r } by exhaustive scan (squared distances).
inline std::vector<std::uint32_t> brute_neighbors(const std::vector<Vec2>& pts, std::size_t q,
                                                  double r) {
  std::vector<std::uint32_t> out;
  const double r2 = r * r;
  for (std::size_t u = 0; u < pts.size(); ++u) {
    if (u == q) continue;
    const double dx = pts[u].x - pts[q].x;
    const double dy = pts[u].y - pts[q].y;
    if (dx * dx + dy * dy < r2) out.push_back(static_cast<std::uint32_t>(u));
  }
  return out;
}

/// Double-loop cut-off repulsion for layouts without coincident points.
inline std::vector<Vec2> brute_repulsion_cutoff(const std::vector<Vec2>& pts, double k) {
  std::vector<Vec2> disp(pts.size());
  const double radius = 2.0 * k;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t u = 0; u < pts.size(); ++u) {
      if (u == v) continue;
      const double dx = pts[v].x - pts[u].x;
      const double dy = pts[v].y - pts[u].y;
      const double dist = std::sqrt(dx * dx + dy * dy);
      if (!(dist < radius)) continue;
      // unit(delta) * k^2 / |delta|
      const double mag = k * k / dist;
      sx += dx / dist * mag;
      sy += dy / dist * mag;
    }
    disp[v] = {sx, sy};
  }
  return disp;
}

/// Double-loop repulsion without cut-off.
inline std::vector<Vec2> brute_repulsion(const std::vector<Vec2>& pts, double k) {
  std::vector<Vec2> disp(pts.size());
  for (std::size_t v = 0; v < pts.size(); ++v) {
    for (std::size_t u = 0; u < pts.size(); ++u) {
      if (u == v) continue;
      const double dx = pts[v].x - pts[u].x;
      const double dy = pts[v].y - pts[u].y;
      const double dist = std::sqrt(dx * dx + dy * dy);
      disp[v].x += dx / dist * (k * k / dist);
      disp[v].y += dy / dist * (k * k / dist);
    }
  }
  return disp;
}

}  // namespace rtfr::testing
