#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rtfr/backend.hpp"
#include "rtfr/graph.hpp"
#include "rtfr/layout.hpp"

namespace rtfr {

struct EngineConfig {
  std::string backend = "lbvh";
  std::size_t iterations = 100;
  std::uint64_t seed = 42;
  double initial_extent = 100.0;
  /// Sequential attractive phase in edge order. When off and `parallel` is
  /// set, edge forces are summed in per-thread buffers and merged.
  bool deterministic = true;
  bool parallel = false;
  /// Worker threads when `parallel`; 0 = hardware concurrency.
  unsigned threads = 0;
};

struct IterationTiming {
  std::size_t iteration = 0;
  double build_ms = 0.0;
  double traversal_ms = 0.0;
  double attract_ms = 0.0;
  double displace_ms = 0.0;
  double total_ms = 0.0;
};

struct TimingReport {
  std::vector<IterationTiming> iterations;
};

struct LayoutResult {
  Layout layout;
  TimingReport timings;
};

/// Called after each iteration's displacement with the updated layout.
using IterationObserver = std::function<void(std::size_t iteration, const Layout&)>;

/// Starting temperature: a tenth of the initial square's side.
constexpr double initial_temperature(double initial_extent) noexcept {
  return initial_extent / 10.0;
}

/// Runs the spring embedder from init_layout(g, extent, seed).
LayoutResult run_layout(const Graph& g, const EngineConfig& config);

/// Runs the spring embedder from a caller-supplied layout.
LayoutResult run_layout(const Graph& g, Layout initial, const EngineConfig& config,
                        const IterationObserver& observer = {});

/// Attractive phase summed per thread and merged; not bitwise reproducible
/// across thread counts.
void attractive_phase_parallel(const Graph& g, std::span<const Vec2> positions, double k,
                               std::span<Vec2> disp, unsigned threads);

/// CSV: iteration,build_ms,traversal_ms,attract_ms,displace_ms,total_ms
void write_timing_csv(std::ostream& out, const TimingReport& report);

}  // namespace rtfr
