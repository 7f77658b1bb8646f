#include "rtfr/bench.hpp"

#include <cmath>
#include <map>
#include <ostream>

#include "rtfr/engine.hpp"
#include "rtfr/error.hpp"
#include "rtfr/format.hpp"

namespace rtfr {

BenchRecord bench_graph(const Graph& g, const std::string& dataset, BackendId backend,
                        const BenchOptions& options) {
  if (options.iterations == 0) throw InvalidArgument("bench needs at least one measured iteration");
  EngineConfig config;
  config.backend = std::string(to_string(backend));
  config.iterations = options.warmup + options.iterations;
  config.seed = options.seed;
  config.initial_extent = options.initial_extent;
  config.parallel = options.parallel;
  config.threads = options.threads;
  const LayoutResult run = run_layout(g, config);

  BenchRecord rec;
  rec.dataset = dataset;
  rec.backend = config.backend;
  rec.vertex_count = g.vertex_count();
  rec.iterations = options.iterations;
  for (std::size_t i = options.warmup; i < run.timings.iterations.size(); ++i) {
    const IterationTiming& t = run.timings.iterations[i];
    rec.build_ms += t.build_ms;
    rec.traversal_ms += t.traversal_ms;
    rec.full_iter_ms += t.total_ms;
  }
  const auto n = static_cast<double>(options.iterations);
  rec.build_ms /= n;
  rec.traversal_ms /= n;
  rec.full_iter_ms /= n;
  rec.repulsive_ms = rec.build_ms + rec.traversal_ms;
  rec.build_pct = rec.repulsive_ms > 0.0 ? rec.build_ms / rec.repulsive_ms * 100.0 : 0.0;
  return rec;
}

void assign_speedups(std::span<BenchRecord> records, std::string_view reference_backend) {
  std::map<std::string, double, std::less<>> reference;
  for (const BenchRecord& r : records) {
    if (r.backend == reference_backend) reference[r.dataset] = r.repulsive_ms;
  }
  for (BenchRecord& r : records) {
    const auto it = reference.find(r.dataset);
    if (it != reference.end() && r.repulsive_ms > 0.0) r.speedup = it->second / r.repulsive_ms;
  }
}

std::vector<BenchRecord> bench_scale(unsigned min_depth, unsigned max_depth,
                                     std::span<const BackendId> backends,
                                     const BenchOptions& options) {
  if (min_depth < 1 || min_depth > max_depth) throw InvalidArgument("invalid depth range");
  if (max_depth > 18) throw InvalidArgument("depth above 18 is not supported");
  std::vector<BenchRecord> records;
  for (unsigned depth = min_depth; depth <= max_depth; ++depth) {
    const Graph g = gen_binary_tree(depth);
    const std::string label = "btree-d" + std::to_string(depth);
    for (BackendId b : backends) records.push_back(bench_graph(g, label, b, options));
  }
  assign_speedups(records, options.reference_backend);
  return records;
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::nullopt;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (!(sxx > 0.0)) return std::nullopt;
  return sxy / sxx;
}

std::vector<ScalingFit> fit_scaling(std::span<const BenchRecord> records) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> points;
  for (const BenchRecord& r : records) {
    if (!(r.repulsive_ms > 0.0) || r.vertex_count == 0) continue;
    auto [it, inserted] = points.try_emplace(r.backend);
    if (inserted) order.push_back(r.backend);
    it->second.first.push_back(static_cast<double>(r.vertex_count));
    it->second.second.push_back(r.repulsive_ms);
  }
  std::vector<ScalingFit> fits;
  for (const std::string& backend : order) {
    const auto& [xs, ys] = points.at(backend);
    if (const auto slope = loglog_slope(xs, ys)) fits.push_back({backend, *slope, xs.size()});
  }
  return fits;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "dataset,backend,iterations,build_ms,traversal_ms,build_pct,repulsive_ms,full_iter_ms,"
         "speedup\n";
  for (const BenchRecord& r : records) {
    out << r.dataset << ',' << r.backend << ',' << r.iterations << ','
        << format_double(r.build_ms) << ',' << format_double(r.traversal_ms) << ','
        << format_double(r.build_pct) << ',' << format_double(r.repulsive_ms) << ','
        << format_double(r.full_iter_ms) << ',';
    if (r.speedup) out << format_double(*r.speedup);
    out << '\n';
  }
}

void write_scaling_csv(std::ostream& out, std::span<const ScalingFit> fits) {
  out << "backend,slope,points\n";
  for (const ScalingFit& f : fits) {
    out << f.backend << ',' << format_double(f.slope) << ',' << f.points << '\n';
  }
}

}  // namespace rtfr
