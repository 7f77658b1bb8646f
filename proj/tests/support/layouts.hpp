#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "rtfr/geometry.hpp"

namespace rtfr::testing {

enum class Distribution { uniform, clustered, lattice, coincident_groups };

inline const char* name(Distribution d) {
  switch (d) {
    case Distribution::uniform: return "uniform";
    case Distribution::clustered: return "clustered";
    case Distribution::lattice: return "lattice";
    case Distribution::coincident_groups: return "coincident";
  }
  return "?";
}

/// Random layouts covering the cases the backends must agree on: spread
/// points, tight clusters, integer lattices (pairs exactly at distance 2),
/// and groups of identical points.
inline std::vector<Vec2> make_layout(std::size_t n, Distribution dist, std::uint64_t seed,
                                     double extent = 100.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec2> pts(n);
  switch (dist) {
    case Distribution::uniform:
      for (auto& p : pts) p = {unit(rng) * extent, unit(rng) * extent};
      break;
    case Distribution::clustered: {
      const std::size_t centers = std::max<std::size_t>(1, n / 50);
      std::vector<Vec2> c(centers);
      for (auto& p : c) p = {unit(rng) * extent, unit(rng) * extent};
      std::normal_distribution<double> jitter(0.0, extent / 200.0);
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 base = c[i % centers];
        pts[i] = {base.x + jitter(rng), base.y + jitter(rng)};
      }
      break;
    }
    case Distribution::lattice: {
      const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (std::size_t i = 0; i < n; ++i) {
        pts[i] = {2.0 * static_cast<double>(i % side), 2.0 * static_cast<double>(i / side)};
      }
      std::shuffle(pts.begin(), pts.end(), rng);
      break;
    }
    case Distribution::coincident_groups: {
      const std::size_t groups = std::max<std::size_t>(1, n / 4);
      std::vector<Vec2> c(groups);
      for (auto& p : c) p = {unit(rng) * extent, unit(rng) * extent};
      std::uniform_int_distribution<std::size_t> pick(0, groups - 1);
      for (auto& p : pts) p = c[pick(rng)];
      break;
    }
  }
  return pts;
}

inline bool bitwise_equal(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(Vec2)) != 0) return false;
  }
  return true;
}

}  // namespace rtfr::testing
