#include <gtest/gtest.h>

#include <sstream>

#include "rtfr/backend.hpp"
#include "rtfr/engine.hpp"
#include "rtfr/error.hpp"
#include "rtfr/forces.hpp"
#include "support/layouts.hpp"

namespace rtfr {
namespace {

using testing::bitwise_equal;

TEST(Engine, IsolatedPairSeparates) {
  const Graph g(2, {});
  const Layout start{{49, 50}, {51, 50}};
  EngineConfig cfg;
  cfg.backend = "naive";
  cfg.iterations = 10;
  const auto r = run_layout(g, start, cfg);
  EXPECT_GT(length(r.layout[0] - r.layout[1]), 2.0);
}

TEST(Engine, EdgePullsDistantPairTogether) {
  const Graph g(2, {{0, 1}});
  const Layout start{{0, 0}, {100, 0}};
  EngineConfig cfg;
  cfg.backend = "naive";
  cfg.iterations = 50;
  const auto r = run_layout(g, start, cfg);
  EXPECT_LT(length(r.layout[0] - r.layout[1]), 100.0);
}

TEST(Engine, DeterministicForFixedSeed) {
  const Graph g = gen_k5_cluster_graph(30, true);
  EngineConfig cfg;
  cfg.iterations = 40;
  EXPECT_TRUE(bitwise_equal(run_layout(g, cfg).layout, run_layout(g, cfg).layout));
  cfg.parallel = true;
  cfg.threads = 4;
  const auto par = run_layout(g, cfg).layout;
  cfg.parallel = false;
  EXPECT_TRUE(bitwise_equal(par, run_layout(g, cfg).layout));
}

TEST(Engine, CutoffBackendsAgreeBitwise) {
  const Graph g = gen_binary_tree(7);
  EngineConfig cfg;
  cfg.iterations = 60;
  cfg.backend = "naive-cutoff";
  const Layout ref = run_layout(g, cfg).layout;
  for (const char* b : {"grid", "lbvh", "rayquery"}) {
    cfg.backend = b;
    EXPECT_TRUE(bitwise_equal(run_layout(g, cfg).layout, ref)) << b;
  }
}

TEST(Engine, RejectsBadConfiguration) {
  const Graph g = gen_binary_tree(2);
  EngineConfig cfg;
  cfg.backend = "octree";
  EXPECT_THROW(run_layout(g, cfg), InvalidArgument);
  cfg.backend = "grid";
  cfg.iterations = 0;
  EXPECT_THROW(run_layout(g, cfg), InvalidArgument);
  cfg.iterations = 1;
  EXPECT_THROW(run_layout(g, Layout(2), cfg), InvalidArgument);
}

TEST(Engine, ObserverSeesEveryIteration) {
  const Graph g = gen_binary_tree(3);
  EngineConfig cfg;
  cfg.iterations = 7;
  std::vector<std::size_t> seen;
  const auto r = run_layout(g, init_layout(g, 100.0, 1), cfg,
                            [&](std::size_t i, const Layout& l) {
                              seen.push_back(i);
                              EXPECT_TRUE(all_finite(l));
                            });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(r.timings.iterations.size(), 7u);
  for (const auto& t : r.timings.iterations) {
    EXPECT_GE(t.total_ms, 0.0);
    EXPECT_GE(t.build_ms, 0.0);
  }
}

TEST(Engine, NondeterministicAttractionStaysClose) {
  const Graph g = gen_k5_cluster_graph(100, true);
  const Layout p = init_layout(g, 100.0, 4);
  const double k = compute_k(p);
  DispersionBuffer a(p.size());
  DispersionBuffer b(p.size());
  attractive_phase(g, p, k, a);
  attractive_phase_parallel(g, p, k, b, 4);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_NEAR(a[i].x, b[i].x, 1e-9 * (1 + std::abs(a[i].x)));
    EXPECT_NEAR(a[i].y, b[i].y, 1e-9 * (1 + std::abs(a[i].y)));
  }
  EngineConfig cfg;
  cfg.iterations = 20;
  cfg.parallel = true;
  cfg.threads = 4;
  cfg.deterministic = false;
  EXPECT_TRUE(all_finite(run_layout(g, cfg).layout));
}

TEST(Engine, CoincidentStartStaysFinite) {
  const Graph g = gen_k5_cluster_graph(20, true);
  EngineConfig cfg;
  cfg.iterations = 200;
  for (const char* b : {"naive", "grid", "lbvh", "rayquery"}) {
    cfg.backend = b;
    const auto r = run_layout(g, Layout(g.vertex_count(), Vec2{5, 5}), cfg);
    EXPECT_TRUE(all_finite(r.layout)) << b;
  }
}

TEST(Engine, TimingCsvHeader) {
  TimingReport rep;
  rep.iterations.push_back({0, 1.5, 2.0, 0.25, 0.125, 4.0});
  std::ostringstream out;
  write_timing_csv(out, rep);
  EXPECT_EQ(out.str(),
            "iteration,build_ms,traversal_ms,attract_ms,displace_ms,total_ms\n"
            "0,1.5,2,0.25,0.125,4\n");
}

TEST(Backends, NamesRoundTrip) {
  for (BackendId id : kAllBackends) {
    EXPECT_EQ(parse_backend_id(to_string(id)), id);
    EXPECT_EQ(make_backend(id)->id(), id);
  }
  EXPECT_FALSE(parse_backend_id("octree").has_value());
}

}  // namespace
}  // namespace rtfr
