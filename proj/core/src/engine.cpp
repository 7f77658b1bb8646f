#include "rtfr/engine.hpp"

#include <algorithm>
#include <ostream>

#include "rtfr/error.hpp"
#include "rtfr/forces.hpp"
#include "rtfr/format.hpp"
#include "rtfr/parallel.hpp"
#include "stopwatch.hpp"

namespace rtfr {

void attractive_phase_parallel(const Graph& g, std::span<const Vec2> positions, double k,
                               std::span<Vec2> disp, unsigned threads) {
  const auto edges = g.edges();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(resolve_thread_count(threads), edges.size()));
  std::vector<std::vector<Vec2>> partial(workers, std::vector<Vec2>(disp.size()));
  const std::size_t chunk = (edges.size() + workers - 1) / workers;
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t wb, std::size_t we) {
    for (std::size_t w = wb; w < we; ++w) {
      auto& local = partial[w];
      const std::size_t end = std::min(edges.size(), (w + 1) * chunk);
      for (std::size_t i = w * chunk; i < end; ++i) {
        const Edge e = edges[i];
        const Vec2 force = f_att(positions[e.second] - positions[e.first], k);
        local[e.second] -= force;
        local[e.first] += force;
      }
    }
  });
  for (const auto& local : partial) {
    for (std::size_t v = 0; v < disp.size(); ++v) disp[v] += local[v];
  }
}

LayoutResult run_layout(const Graph& g, const EngineConfig& config) {
  if (g.vertex_count() == 0) throw InvalidArgument("graph has no vertices");
  return run_layout(g, init_layout(g, config.initial_extent, config.seed), config);
}

LayoutResult run_layout(const Graph& g, Layout initial, const EngineConfig& config,
                        const IterationObserver& observer) {
  // Resolve the backend before touching any state.
  const auto backend_id = parse_backend_id(config.backend);
  if (!backend_id) throw InvalidArgument("unknown backend '" + config.backend + "'");
  if (config.iterations == 0) throw InvalidArgument("iterations must be positive");
  if (initial.size() != g.vertex_count()) {
    throw InvalidArgument("initial layout size does not match the graph");
  }
  const unsigned threads = config.parallel ? resolve_thread_count(config.threads) : 1;
  auto backend = make_backend(*backend_id, threads);

  LayoutResult result;
  result.layout = std::move(initial);
  result.timings.iterations.reserve(config.iterations);
  Layout& positions = result.layout;
  DispersionBuffer disp(positions.size());
  const double t0 = initial_temperature(config.initial_extent);

  for (std::size_t i = 0; i < config.iterations; ++i) {
    IterationTiming timing;
    timing.iteration = i;
    detail::Stopwatch total;
    detail::Stopwatch phase;

    const double k = compute_k(positions);
    std::fill(disp.begin(), disp.end(), Vec2{});
    const RepulsiveTiming rep = backend->compute(positions, k, disp);
    timing.build_ms = rep.build_ms;
    timing.traversal_ms = rep.traversal_ms;
    phase.lap_ms();

    if (!config.deterministic && config.parallel) {
      attractive_phase_parallel(g, positions, k, disp, threads);
    } else {
      attractive_phase(g, positions, k, disp);
    }
    timing.attract_ms = phase.lap_ms();

    displace(positions, disp, cool(t0, i, config.iterations));
    timing.displace_ms = phase.lap_ms();
    timing.total_ms = total.lap_ms();
    result.timings.iterations.push_back(timing);

    if (observer) observer(i, positions);
  }
  return result;
}

void write_timing_csv(std::ostream& out, const TimingReport& report) {
  out << "iteration,build_ms,traversal_ms,attract_ms,displace_ms,total_ms\n";
  for (const IterationTiming& t : report.iterations) {
    out << t.iteration << ',' << format_double(t.build_ms) << ','
        << format_double(t.traversal_ms) << ',' << format_double(t.attract_ms) << ','
        << format_double(t.displace_ms) << ',' << format_double(t.total_ms) << '\n';
  }
}

}  // namespace rtfr
