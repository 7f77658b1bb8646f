#include "rtfr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rtfr/error.hpp"
#include "rtfr/format.hpp"

namespace rtfr {
namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on spaces/tabs; returns false on anything but two unsigned integers.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  std::uint64_t* out[2] = {&a, &b};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (count == 2) return false;
    const auto token = line.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *out[count]);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return false;
    ++count;
    pos = end;
  }
  return count == 2;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ > std::numeric_limits<VertexId>::max()) {
    throw InvalidArgument("vertex count exceeds 32-bit id range");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  std::vector<std::size_t> degree(vertex_count_, 0);
  for (Edge& e : edges_) {
    if (e.first == e.second) throw InvalidArgument("self-loop on vertex " + std::to_string(e.first));
    e = canonical(e.first, e.second);
    if (e.second >= vertex_count_) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.second) + " out of range");
    }
    if (!seen.insert(edge_key(e.first, e.second)).second) {
      throw InvalidArgument("duplicate edge " + std::to_string(e.first) + "-" +
                            std::to_string(e.second));
    }
    ++degree[e.first];
    ++degree[e.second];
  }

  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.first]++] = e.second;
    adjacency_[cursor[e.second]++] = e.first;
  }
}

ParseResult parse_edge_list(std::istream& in, const ParseOptions& options) {
  ParseResult result;
  std::optional<std::uint64_t> header_count;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.starts_with("|V|")) {
      if (header_count || !raw.empty()) throw ParseError(line_no, "header must precede all edges");
      const auto rest = trim(body.substr(3));
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
        throw ParseError(line_no, "malformed vertex-count header");
      }
      header_count = n;
      continue;
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(body, a, b)) {
      throw ParseError(line_no, "expected two non-negative integers, got '" + std::string(body) + "'");
    }
    raw.emplace_back(a, b);
  }

  if (raw.empty() && !header_count) throw ParseError(line_no, "empty edge list");

  std::unordered_map<std::uint64_t, VertexId> remap;
  auto map_id = [&](std::uint64_t id) -> std::uint64_t {
    if (!options.remap_ids) return id;
    auto [it, inserted] = remap.try_emplace(id, static_cast<VertexId>(result.original_ids.size()));
    if (inserted) result.original_ids.push_back(id);
    return it->second;
  };

  std::uint64_t max_id = 0;
  bool any = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mapped;
  mapped.reserve(raw.size());
  for (auto [a, b] : raw) {
    const auto u = map_id(a);
    const auto v = map_id(b);
    max_id = std::max({max_id, u, v});
    any = true;
    mapped.emplace_back(u, v);
  }

  std::uint64_t vertex_count = any ? max_id + 1 : 0;
  if (header_count) {
    if (*header_count < vertex_count) {
      throw ParseError(1, "header declares " + std::to_string(*header_count) +
                              " vertices but ids reach " + std::to_string(max_id));
    }
    vertex_count = *header_count;
  }
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "vertex id exceeds 32-bit range");
  }

  std::vector<Edge> edges;
  edges.reserve(mapped.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(mapped.size());
  for (auto [a, b] : mapped) {
    if (a == b) {
      ++result.dropped_self_loops;
      continue;
    }
    const Edge e = canonical(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(edge_key(e.first, e.second)).second) {
      ++result.dropped_duplicates;
      continue;
    }
    edges.push_back(e);
  }
  result.graph = Graph(static_cast<std::size_t>(vertex_count), std::move(edges));
  return result;
}

ParseResult parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "|V| " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph gen_k5_cluster_graph(std::size_t cluster_count, bool connected) {
  if (cluster_count == 0) throw InvalidArgument("cluster count must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(cluster_count * 10 + (connected ? cluster_count - 1 : 0));
  for (std::size_t c = 0; c < cluster_count; ++c) {
    const auto base = static_cast<VertexId>(c * 5);
    for (VertexId i = 0; i < 5; ++i) {
      for (VertexId j = i + 1; j < 5; ++j) edges.push_back({base + i, base + j});
    }
  }
  if (connected) {
    for (std::size_t c = 0; c + 1 < cluster_count; ++c) {
      edges.push_back({static_cast<VertexId>(c * 5), static_cast<VertexId>((c + 1) * 5)});
    }
  }
  return Graph(cluster_count * 5, std::move(edges));
}

Graph gen_binary_tree(unsigned depth) {
  if (depth == 0) throw InvalidArgument("binary tree depth must be at least 1");
  if (depth > 30) throw InvalidArgument("binary tree depth too large");
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t child = 1; child < n; ++child) {
    edges.push_back({static_cast<VertexId>((child - 1) / 2), static_cast<VertexId>(child)});
  }
  return Graph(n, std::move(edges));
}

std::vector<std::size_t> component_labels(const Graph& g) {
  // Union-find with path halving; roots re-labelled by smallest member.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : g.edges()) {
    auto a = find(e.first);
    auto b = find(e.second);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label_of_root(g.vertex_count(), unset);
  std::vector<std::size_t> labels(g.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto r = find(v);
    if (label_of_root[r] == unset) label_of_root[r] = next++;
    labels[v] = label_of_root[r];
  }
  return labels;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  if (s.vertex_count == 0) return s;

  s.min_degree = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < s.vertex_count; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.mean_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.vertex_count);

  const auto labels = component_labels(g);
  s.component_count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::size_t> sizes(s.component_count, 0);
  for (auto l : labels) ++sizes[l];
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  s.min_component_vertices = *lo;
  s.max_component_vertices = *hi;
  s.mean_component_vertices =
      static_cast<double>(s.vertex_count) / static_cast<double>(s.component_count);
  return s;
}

void write_stats_csv(std::ostream& out, const GraphStats& s) {
  out << "vertices,edges,components,min_deg,max_deg,mean_deg,min_cvert,max_cvert,mean_cvert\n"
      << s.vertex_count << ',' << s.edge_count << ',' << s.component_count << ','
      << s.min_degree << ',' << s.max_degree << ',' << format_double(s.mean_degree) << ','
      << s.min_component_vertices << ',' << s.max_component_vertices << ','
      << format_double(s.mean_component_vertices) << '\n';
}

}  // namespace rtfr
