#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rtfr/bench.hpp"
#include "rtfr/engine.hpp"
#include "rtfr/error.hpp"
#include "rtfr/graph.hpp"
#include "rtfr/layout.hpp"
#include "rtfr/svg.hpp"

namespace rtfr::cli {
namespace {

std::vector<std::string> backend_names() {
  std::vector<std::string> names;
  for (BackendId id : kAllBackends) names.emplace_back(to_string(id));
  return names;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void finish(std::ofstream& file, const std::string& path) {
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  auto file = open_output(path);
  writer(file);
  finish(file, path);
}

ParseResult load_graph(const std::string& path, bool remap, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  ParseResult parsed = parse_edge_list(in, ParseOptions{remap});
  if (parsed.dropped_duplicates || parsed.dropped_self_loops) {
    err << "note: dropped " << parsed.dropped_duplicates << " duplicate edge(s) and "
        << parsed.dropped_self_loops << " self-loop(s)\n";
  }
  return parsed;
}

void write_id_map(const std::string& path, const ParseResult& parsed) {
  write_file(path, [&](std::ostream& o) {
    o << "id,original_id\n";
    for (std::size_t i = 0; i < parsed.original_ids.size(); ++i) {
      o << i << ',' << parsed.original_ids[i] << '\n';
    }
  });
}

std::vector<BackendId> to_backend_ids(const std::vector<std::string>& names) {
  std::vector<BackendId> ids;
  for (const auto& name : names) ids.push_back(*parse_backend_id(name));
  return ids;
}

void print_scaling(std::ostream& o, std::span<const BenchRecord> records) {
  for (const ScalingFit& fit : fit_scaling(records)) {
    o << "log-log slope " << fit.backend << ": " << fit.slope << " (" << fit.points
      << " sizes)\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fruchterman-Reingold layouts with interchangeable repulsion backends", "rtfr"};
  app.require_subcommand(1);
  const auto backends = backend_names();

  // gen
  std::string generator;
  unsigned depth = 16;
  std::size_t clusters = 5000;
  bool connected = false;
  std::string gen_out;
  std::string gen_stats;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph as an edge list");
  gen->add_option("generator", generator, "btree | k5")
      ->required()
      ->check(CLI::IsMember({"btree", "k5"}));
  gen->add_option("--depth", depth, "Binary tree depth (root at depth 0)")->check(CLI::Range(1u, 30u));
  gen->add_option("--clusters", clusters, "Number of K5 clusters");
  gen->add_flag("--connected", connected, "Chain the K5 clusters by single edges");
  gen->add_option("--out", gen_out, "Edge-list output path")->required();
  gen->add_option("--stats", gen_stats, "Stats CSV path (default: <out>.stats.csv)");

  // layout
  std::string input;
  std::string backend = "lbvh";
  std::size_t iterations = 100;
  std::uint64_t seed = 42;
  double extent = 100.0;
  std::string deterministic = "on";
  unsigned threads = 0;
  std::string svg_path;
  std::string positions_path;
  std::string timings_path;
  std::string id_map_path;
  auto* layout = app.add_subcommand("layout", "Run the spring embedder on an edge list");
  layout->add_option("--input", input, "Edge-list path")->required();
  layout->add_option("--backend", backend, "Repulsion backend")->check(CLI::IsMember(backends));
  layout->add_option("--iterations", iterations, "Iterations")->check(CLI::PositiveNumber);
  layout->add_option("--seed", seed, "Initial placement seed");
  layout->add_option("--extent", extent, "Side of the initial square")->check(CLI::PositiveNumber);
  layout->add_option("--deterministic", deterministic, "on | off")
      ->check(CLI::IsMember({"on", "off"}));
  layout->add_option("--threads", threads, "Worker threads (0 = auto)");
  layout->add_option("--svg", svg_path, "Write an SVG drawing");
  layout->add_option("--positions", positions_path, "Positions CSV (default: stdout)");
  layout->add_option("--timings", timings_path, "Per-iteration timing CSV");
  layout->add_option("--id-map", id_map_path, "Renumber sparse ids and write the mapping CSV");

  // bench-scale
  unsigned min_depth = 4;
  unsigned max_depth = 10;
  std::vector<std::string> bench_backends{"naive-cutoff", "grid", "lbvh", "rayquery"};
  std::size_t warmup = 2;
  std::string reference = "naive-cutoff";
  std::string bench_out;
  std::string slopes_path;
  auto* scale = app.add_subcommand("bench-scale", "Repulsive-phase scaling over binary trees");
  scale->add_option("--min-depth", min_depth, "Smallest tree depth")->check(CLI::Range(1u, 18u));
  scale->add_option("--max-depth", max_depth, "Largest tree depth")->check(CLI::Range(1u, 18u));
  scale->add_option("--backends", bench_backends, "Backends to measure")
      ->delimiter(',')
      ->check(CLI::IsMember(backends));
  scale->add_option("--iterations", iterations, "Measured iterations per run")
      ->check(CLI::PositiveNumber);
  scale->add_option("--warmup", warmup, "Discarded iterations per run");
  scale->add_option("--seed", seed, "Initial placement seed");
  scale->add_option("--extent", extent, "Side of the initial square")->check(CLI::PositiveNumber);
  scale->add_option("--threads", threads, "Worker threads (0 = auto)");
  scale->add_option("--reference", reference, "Speedup reference backend")
      ->check(CLI::IsMember(backends));
  scale->add_option("--out", bench_out, "Bench CSV path (default: stdout)");
  scale->add_option("--slopes", slopes_path, "Write per-backend log-log slopes as CSV");

  // bench-table
  double size_scale = 1.0;
  std::vector<std::string> table_backends{"grid", "lbvh", "rayquery"};
  std::string table_reference = "lbvh";
  auto* table = app.add_subcommand(
      "bench-table", "Per-phase repulsion report over the K5-cluster and binary-tree datasets");
  table->add_option("--scale", size_scale, "Fraction of the full dataset sizes")
      ->check(CLI::Range(1e-4, 1.0));
  table->add_option("--backends", table_backends, "Backends to measure")
      ->delimiter(',')
      ->check(CLI::IsMember(backends));
  table->add_option("--iterations", iterations, "Measured iterations per run")
      ->check(CLI::PositiveNumber);
  table->add_option("--warmup", warmup, "Discarded iterations per run");
  table->add_option("--seed", seed, "Initial placement seed");
  table->add_option("--threads", threads, "Worker threads (0 = auto)");
  table->add_option("--reference", table_reference, "Speedup reference backend")
      ->check(CLI::IsMember(backends));
  table->add_option("--input", input, "Additional edge-list dataset");
  table->add_option("--out", bench_out, "Bench CSV path (default: stdout)");

  // stats
  std::string stats_out;
  auto* stats = app.add_subcommand("stats", "Graph statistics as CSV");
  stats->add_option("--input", input, "Edge-list path")->required();
  stats->add_option("--out", stats_out, "Stats CSV path (default: stdout)");
  stats->add_option("--id-map", id_map_path, "Renumber sparse ids and write the mapping CSV");

  std::vector<std::string> argv_storage{"rtfr"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      const Graph g = generator == "btree" ? gen_binary_tree(depth)
                                           : gen_k5_cluster_graph(clusters, connected);
      write_file(gen_out, [&](std::ostream& o) { write_edge_list(o, g); });
      const std::string stats_path = gen_stats.empty() ? gen_out + ".stats.csv" : gen_stats;
      write_file(stats_path, [&](std::ostream& o) { write_stats_csv(o, graph_stats(g)); });
      return 0;
    }

    if (layout->parsed()) {
      const ParseResult parsed = load_graph(input, !id_map_path.empty(), err);
      EngineConfig config;
      config.backend = backend;
      config.iterations = iterations;
      config.seed = seed;
      config.initial_extent = extent;
      config.deterministic = deterministic == "on";
      config.parallel = true;
      config.threads = threads;
      const LayoutResult result = run_layout(parsed.graph, config);

      if (!id_map_path.empty()) write_id_map(id_map_path, parsed);
      if (positions_path.empty()) {
        write_layout_csv(out, result.layout);
      } else {
        write_file(positions_path, [&](std::ostream& o) { write_layout_csv(o, result.layout); });
      }
      if (!svg_path.empty()) {
        write_file(svg_path, [&](std::ostream& o) { export_svg(o, parsed.graph, result.layout); });
      }
      if (!timings_path.empty()) {
        write_file(timings_path, [&](std::ostream& o) { write_timing_csv(o, result.timings); });
      }
      return 0;
    }

    if (scale->parsed()) {
      if (min_depth > max_depth) throw InvalidArgument("--min-depth exceeds --max-depth");
      BenchOptions options;
      options.iterations = iterations;
      options.warmup = warmup;
      options.seed = seed;
      options.initial_extent = extent;
      options.reference_backend = reference;
      options.parallel = threads != 1;
      options.threads = threads;
      const auto ids = to_backend_ids(bench_backends);
      const auto records = bench_scale(min_depth, max_depth, ids, options);
      if (bench_out.empty()) {
        write_bench_csv(out, records);
        print_scaling(err, records);
      } else {
        write_file(bench_out, [&](std::ostream& o) { write_bench_csv(o, records); });
        print_scaling(out, records);
      }
      if (!slopes_path.empty()) {
        const auto fits = fit_scaling(records);
        write_file(slopes_path, [&](std::ostream& o) { write_scaling_csv(o, fits); });
      }
      return 0;
    }

    if (table->parsed()) {
      BenchOptions options;
      options.iterations = iterations;
      options.warmup = warmup;
      options.seed = seed;
      options.reference_backend = table_reference;
      options.parallel = threads != 1;
      options.threads = threads;
      auto scaled = [&](std::size_t full) {
        return std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(full) * size_scale));
      };
      // Binary tree depth shrinks with log2 of the scale.
      const auto tree_depth = static_cast<unsigned>(
          std::max(1.0, std::round(16.0 + std::log2(size_scale))));

      std::vector<std::pair<std::string, Graph>> datasets;
      datasets.emplace_back("k5x" + std::to_string(scaled(5000)) + "-connected",
                            gen_k5_cluster_graph(scaled(5000), true));
      if (!input.empty()) {
        datasets.emplace_back(std::filesystem::path(input).stem().string(),
                              load_graph(input, true, err).graph);
      }
      datasets.emplace_back("btree-d" + std::to_string(tree_depth), gen_binary_tree(tree_depth));
      datasets.emplace_back("k5x" + std::to_string(scaled(50000)) + "-unconnected",
                            gen_k5_cluster_graph(scaled(50000), false));

      const auto ids = to_backend_ids(table_backends);
      std::vector<BenchRecord> records;
      for (const auto& [label, g] : datasets) {
        for (BackendId id : ids) records.push_back(bench_graph(g, label, id, options));
      }
      assign_speedups(records, table_reference);
      if (bench_out.empty()) {
        write_bench_csv(out, records);
      } else {
        write_file(bench_out, [&](std::ostream& o) { write_bench_csv(o, records); });
      }
      return 0;
    }

    if (stats->parsed()) {
      const ParseResult parsed = load_graph(input, !id_map_path.empty(), err);
      if (!id_map_path.empty()) write_id_map(id_map_path, parsed);
      const GraphStats s = graph_stats(parsed.graph);
      if (stats_out.empty()) {
        write_stats_csv(out, s);
      } else {
        write_file(stats_out, [&](std::ostream& o) { write_stats_csv(o, s); });
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rtfr::cli
