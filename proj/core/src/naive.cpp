#include "rtfr/naive.hpp"

#include "rtfr/forces.hpp"
#include "rtfr/parallel.hpp"
#include "stopwatch.hpp"

namespace rtfr {
namespace {

template <class Force>
RepulsiveTiming all_pairs(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                          unsigned threads, Force force) {
  detail::Stopwatch clock;
  const std::size_t n = positions.size();
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      const Vec2 pv = positions[v];
      Vec2 acc = disp[v];
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v) continue;
        acc += force(pv, positions[u], static_cast<VertexId>(v), static_cast<VertexId>(u), k);
      }
      disp[v] = acc;
    }
  });
  return {0.0, clock.lap_ms()};
}

}  // namespace

RepulsiveTiming repulsive_naive(std::span<const Vec2> positions, double k, std::span<Vec2> disp,
                                unsigned threads) {
  return all_pairs(positions, k, disp, threads,
                   [](Vec2 pv, Vec2 pu, VertexId v, VertexId u, double kk) {
                     return repulsion_full(pv, pu, v, u, kk);
                   });
}

RepulsiveTiming repulsive_naive_cutoff(std::span<const Vec2> positions, double k,
                                       std::span<Vec2> disp, unsigned threads) {
  return all_pairs(positions, k, disp, threads,
                   [](Vec2 pv, Vec2 pu, VertexId v, VertexId u, double kk) {
                     return repulsion_cutoff(pv, pu, v, u, kk);
                   });
}

}  // namespace rtfr
