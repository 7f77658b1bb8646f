#include "rtfr/layout.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include "rtfr/error.hpp"
#include "rtfr/format.hpp"

namespace rtfr {

Layout init_layout(std::size_t vertex_count, double extent, std::uint64_t seed) {
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw InvalidArgument("initial extent must be positive and finite");
  }
  if (vertex_count == 0) throw InvalidArgument("layout needs at least one vertex");
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  Layout layout(vertex_count);
  for (Vec2& p : layout) {
    p.x = unit() * extent;
    p.y = unit() * extent;
  }
  return layout;
}

Layout init_layout(const Graph& g, double extent, std::uint64_t seed) {
  return init_layout(g.vertex_count(), extent, seed);
}

bool all_finite(const Layout& layout) noexcept {
  for (Vec2 p : layout) {
    if (!is_finite(p)) return false;
  }
  return true;
}

void write_layout_csv(std::ostream& out, const Layout& layout) {
  out << "id,x,y\n";
  for (std::size_t v = 0; v < layout.size(); ++v) {
    out << v << ',' << format_double(layout[v].x) << ',' << format_double(layout[v].y) << '\n';
  }
}

Layout read_layout_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("id,x,y", 0) != 0) {
    throw ParseError(1, "expected header 'id,x,y'");
  }
  Layout layout;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    std::size_t id = 0;
    Vec2 pos;
    auto r1 = std::from_chars(p, end, id);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ',') throw ParseError(line_no, "bad id");
    auto r2 = std::from_chars(r1.ptr + 1, end, pos.x);
    if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != ',') throw ParseError(line_no, "bad x");
    auto r3 = std::from_chars(r2.ptr + 1, end, pos.y);
    if (r3.ec != std::errc{} || r3.ptr != end) throw ParseError(line_no, "bad y");
    if (id != layout.size()) throw ParseError(line_no, "ids must be dense and ascending");
    layout.push_back(pos);
  }
  return layout;
}

}  // namespace rtfr
