#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "rtfr/geometry.hpp"
#include "rtfr/graph.hpp"

namespace rtfr {

/// Separations shorter than this are replaced by a deterministic jitter
/// vector of exactly this length.
inline constexpr double kMinSeparation = 1e-9;

/// Lower bound applied to each side of the layout bounding box in compute_k.
inline constexpr double kMinBoxExtent = 1.0;

struct ForceParams {
  double k = 1.0;
  double cutoff_radius = 2.0;
  double temperature = 0.0;
  std::size_t iterations = 100;
  double initial_extent = 100.0;
  double min_separation_epsilon = kMinSeparation;

  static ForceParams for_k(double k) noexcept {
    ForceParams p;
    p.k = k;
    p.cutoff_radius = 2.0 * k;
    return p;
  }
};

/// Radius beyond which the cut-off repulsion vanishes.
constexpr double cutoff_radius(double k) noexcept { return 2.0 * k; }

/// Squared cut-off radius. Every backend compares squared distances against
/// this value with strict `<`, so all of them agree on the neighbor set.
constexpr double cutoff_radius_sq(double k) noexcept {
  const double r = cutoff_radius(k);
  return r * r;
}

/// Ideal edge length sqrt(A / |V|), A = area of the positions' bounding box
/// with each side clamped to at least kMinBoxExtent.
double compute_k(std::span<const Vec2> positions);

/// unit(delta) * k^2 / |delta|.
inline Vec2 f_rep(Vec2 delta, double k) noexcept {
  return delta * (k * k / length_squared(delta));
}

/// f_rep restricted to |delta| < 2k; the zero vector on and beyond the boundary.
inline Vec2 f_rep_cutoff(Vec2 delta, double k) noexcept {
  if (!(length_squared(delta) < cutoff_radius_sq(k))) return {};
  return f_rep(delta, k);
}

/// unit(delta) * |delta|^2 / k.
inline Vec2 f_att(Vec2 delta, double k) noexcept { return delta * (length(delta) / k); }

/// Pseudo-random unit vector keyed on the unordered pair {a, b}.
Vec2 pair_jitter_direction(VertexId a, VertexId b) noexcept;

/// p(v) - p(u), or a kMinSeparation-long jitter vector when the two points
/// (nearly) coincide. Antisymmetric under swapping (v, u).
inline Vec2 separation(Vec2 pv, Vec2 pu, VertexId v, VertexId u) noexcept {
  const Vec2 delta = pv - pu;
  if (length_squared(delta) >= kMinSeparation * kMinSeparation) return delta;
  const Vec2 dir = pair_jitter_direction(v, u);
  return v < u ? dir * kMinSeparation : dir * -kMinSeparation;
}

/// Repulsion on v from u under the 2k cut-off; shared by every backend so
/// they produce bitwise-identical contributions.
inline Vec2 repulsion_cutoff(Vec2 pv, Vec2 pu, VertexId v, VertexId u, double k) noexcept {
  return f_rep_cutoff(separation(pv, pu, v, u), k);
}

/// Repulsion on v from u without cut-off.
inline Vec2 repulsion_full(Vec2 pv, Vec2 pu, VertexId v, VertexId u, double k) noexcept {
  return f_rep(separation(pv, pu, v, u), k);
}

/// Adds the edge forces: for {u,v}, disp(v) -= f_att(p(v)-p(u)) and
/// disp(u) += f_att(p(v)-p(u)). Edges are processed in storage order.
void attractive_phase(const Graph& g, std::span<const Vec2> positions, double k,
                      std::span<Vec2> disp);

/// Moves each vertex along its dispersion by at most t.
void displace(std::span<Vec2> positions, std::span<const Vec2> disp, double t);

/// Linear cooling t0 * (1 - i/n).
constexpr double cool(double t0, std::size_t iteration, std::size_t total) noexcept {
  return t0 * (1.0 - static_cast<double>(iteration) / static_cast<double>(total));
}

}  // namespace rtfr
