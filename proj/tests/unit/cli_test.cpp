// Command line, SVG export and benchmark reports.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rtfr/bench.hpp"
#include "rtfr/svg.hpp"

namespace rtfr {
namespace {

namespace fs = std::filesystem;

std::size_t count(const std::string& s, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rtfr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenBinaryTree) {
  ASSERT_EQ(cli({"gen", "btree", "--depth", "4", "--out", path("t.txt")}), 0) << err_.str();
  EXPECT_EQ(slurp(path("t.txt.stats.csv")),
            "vertices,edges,components,min_deg,max_deg,mean_deg,min_cvert,max_cvert,mean_cvert\n"
            "31,30,1,1,3,1.935483870967742,31,31,31\n");
}

TEST_F(CliTest, GenConnectedK5) {
  ASSERT_EQ(cli({"gen", "k5", "--clusters", "2", "--connected", "--out", path("k.txt"), "--stats",
                 path("k.csv")}),
            0);
  const std::string stats = slurp(path("k.csv"));
  EXPECT_NE(stats.find("\n10,21,1,"), std::string::npos) << stats;
}

TEST_F(CliTest, GenZeroClustersFails) {
  EXPECT_NE(cli({"gen", "k5", "--clusters", "0", "--out", path("k.txt")}), 0);
  EXPECT_FALSE(fs::exists(path("k.txt")));
}

TEST_F(CliTest, LayoutIsReproducible) {
  ASSERT_EQ(cli({"gen", "k5", "--clusters", "20", "--connected", "--out", path("g.txt")}), 0);
  for (const char* name : {"a.csv", "b.csv"}) {
    ASSERT_EQ(cli({"layout", "--input", path("g.txt"), "--iterations", "30", "--positions",
                   path(name), "--threads", "3"}),
              0)
        << err_.str();
  }
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  ASSERT_EQ(cli({"layout", "--input", path("g.txt"), "--iterations", "30", "--backend",
                 "naive-cutoff", "--positions", path("c.csv")}),
            0);
  ASSERT_EQ(cli({"layout", "--input", path("g.txt"), "--iterations", "30", "--backend",
                 "rayquery", "--positions", path("d.csv")}),
            0);
  EXPECT_EQ(slurp(path("c.csv")), slurp(path("d.csv")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("c.csv")));
}

TEST_F(CliTest, LayoutWritesSvgAndTimings) {
  ASSERT_EQ(cli({"gen", "btree", "--depth", "5", "--out", path("g.txt")}), 0);
  ASSERT_EQ(cli({"layout", "--input", path("g.txt"), "--iterations", "5", "--svg", path("g.svg"),
                 "--timings", path("t.csv")}),
            0);
  const std::string svg = slurp(path("g.svg"));
  EXPECT_EQ(count(svg, "<line "), 62u);
  EXPECT_EQ(count(svg, "<circle "), 63u);
  EXPECT_EQ(count(slurp(path("t.csv")), "\n"), 6u);
  // Positions went to stdout.
  EXPECT_EQ(count(out_.str(), "\n"), 64u);
}

TEST_F(CliTest, UnknownBackendWritesNothing) {
  ASSERT_EQ(cli({"gen", "btree", "--depth", "3", "--out", path("g.txt")}), 0);
  EXPECT_NE(cli({"layout", "--input", path("g.txt"), "--backend", "bogus", "--positions",
                 path("p.csv"), "--svg", path("p.svg")}),
            0);
  EXPECT_FALSE(fs::exists(path("p.csv")));
  EXPECT_FALSE(fs::exists(path("p.svg")));
}

TEST_F(CliTest, MissingInputFails) {
  EXPECT_EQ(cli({"layout", "--input", path("nope.txt")}), 1);
  EXPECT_NE(err_.str().find("error"), std::string::npos);
}

TEST_F(CliTest, StatsWithIdMap) {
  {
    std::ofstream f(path("s.txt"));
    f << "100 7\n7 42\n";
  }
  ASSERT_EQ(cli({"stats", "--input", path("s.txt"), "--id-map", path("m.csv")}), 0);
  EXPECT_NE(out_.str().find("\n3,2,1,"), std::string::npos);
  EXPECT_NE(slurp(path("m.csv")).find("0,100"), std::string::npos);
}

TEST_F(CliTest, BenchScaleReport) {
  ASSERT_EQ(cli({"bench-scale", "--min-depth", "3", "--max-depth", "4", "--iterations", "2",
                 "--warmup", "0", "--out", path("b.csv"), "--slopes", path("s.csv")}),
            0)
      << err_.str();
  const std::string csv = slurp(path("b.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "dataset,backend,iterations,build_ms,traversal_ms,build_pct,repulsive_ms,full_iter_ms,"
            "speedup");
  EXPECT_EQ(count(csv, "\n"), 9u);
  EXPECT_EQ(count(slurp(path("s.csv")), "\n"), 5u);
}

TEST(Svg, ElementCountsAndViewBox) {
  const Graph g(3, {{0, 1}, {1, 2}});
  const Layout l{{0, 0}, {10, 0}, {10, 10}};
  std::ostringstream out;
  export_svg(out, g, l);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(s, "<line "), 2u);
  EXPECT_EQ(count(s, "<circle "), 3u);
  EXPECT_NE(s.find("viewBox=\"-0.5 -0.5 11 11\""), std::string::npos) << s;
}

TEST(Svg, DegenerateLayout) {
  const Graph g(1, {});
  std::ostringstream out;
  export_svg(out, g, Layout{{2, 2}});
  EXPECT_EQ(count(out.str(), "<circle "), 1u);
  EXPECT_EQ(out.str().find("nan"), std::string::npos);
  EXPECT_EQ(out.str().find("inf"), std::string::npos);
}

TEST(Bench, RecordInvariants) {
  BenchOptions opt;
  opt.iterations = 3;
  opt.warmup = 1;
  const Graph g = gen_k5_cluster_graph(2000, false);
  std::vector<BenchRecord> recs;
  for (BackendId b : {BackendId::naive_cutoff, BackendId::lbvh, BackendId::rayquery}) {
    if (b == BackendId::naive_cutoff) {
      recs.push_back(bench_graph(gen_k5_cluster_graph(40, false), "small", b, opt));
      recs.back().dataset = "k5";
    } else {
      recs.push_back(bench_graph(g, "k5", b, opt));
    }
  }
  assign_speedups(recs, "naive-cutoff");
  for (const auto& r : recs) {
    EXPECT_EQ(r.iterations, 3u);
    EXPECT_NEAR(r.repulsive_ms, r.build_ms + r.traversal_ms, 1e-9);
    ASSERT_TRUE(r.speedup.has_value());
    if (r.backend != "naive-cutoff") {
      EXPECT_EQ(r.vertex_count, 10000u);
      EXPECT_GT(r.build_ms, 0.0);
      EXPECT_GT(r.traversal_ms, 0.0);
      EXPECT_NEAR(r.build_pct + 100.0 * r.traversal_ms / r.repulsive_ms, 100.0, 1e-9);
    }
  }
  EXPECT_DOUBLE_EQ(*recs[0].speedup, 1.0);
}

TEST(Bench, LogLogSlope) {
  const std::vector<double> x{1, 2, 4, 8};
  const std::vector<double> y{3, 12, 48, 192};
  EXPECT_NEAR(*loglog_slope(x, y), 2.0, 1e-12);
  const std::vector<double> one{5};
  EXPECT_FALSE(loglog_slope(one, one).has_value());
}

}  // namespace
}  // namespace rtfr
