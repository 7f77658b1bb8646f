#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtfr/backend.hpp"
#include "rtfr/graph.hpp"

namespace rtfr {

/// One (dataset, backend) row of a benchmark report. All times are means
/// over the measured iterations, in milliseconds.
struct BenchRecord {
  std::string dataset;
  std::string backend;
  std::size_t vertex_count = 0;
  std::size_t iterations = 0;
  double build_ms = 0.0;
  double traversal_ms = 0.0;
  /// build / (build + traversal) * 100
  double build_pct = 0.0;
  /// build + traversal
  double repulsive_ms = 0.0;
  double full_iter_ms = 0.0;
  /// Reference repulsive_ms / this repulsive_ms, when the reference ran.
  std::optional<double> speedup;
};

struct BenchOptions {
  std::size_t iterations = 20;
  /// Iterations run first and discarded.
  std::size_t warmup = 2;
  std::uint64_t seed = 42;
  double initial_extent = 100.0;
  std::string reference_backend = "naive-cutoff";
  bool parallel = false;
  unsigned threads = 0;
};

/// Lays out `g` with `backend` for warmup + iterations steps and averages the
/// per-phase times of the measured steps. Speedup is left unset.
BenchRecord bench_graph(const Graph& g, const std::string& dataset, BackendId backend,
                        const BenchOptions& options);

/// Fills `speedup` on every record whose dataset also has a record for the
/// reference backend.
void assign_speedups(std::span<BenchRecord> records, std::string_view reference_backend);

/// Complete binary trees of depth min_depth..max_depth, every backend per
/// depth, datasets labelled "btree-d<depth>".
std::vector<BenchRecord> bench_scale(unsigned min_depth, unsigned max_depth,
                                     std::span<const BackendId> backends,
                                     const BenchOptions& options);

struct ScalingFit {
  std::string backend;
  double slope = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of log(y) against log(x); nullopt with fewer than two
/// distinct x values.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

/// Slope of log(repulsive_ms) against log(|V|) per backend, in first-seen
/// backend order. Backends with a single size are omitted.
std::vector<ScalingFit> fit_scaling(std::span<const BenchRecord> records);

/// CSV: dataset,backend,iterations,build_ms,traversal_ms,build_pct,repulsive_ms,full_iter_ms,speedup
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

/// CSV: backend,slope,points
void write_scaling_csv(std::ostream& out, std::span<const ScalingFit> fits);

}  // namespace rtfr
