#include "rtfr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rtfr/error.hpp"
#include "rtfr/format.hpp"

namespace rtfr {

void export_svg(std::ostream& out, const Graph& g, const Layout& layout, const SvgStyle& style) {
  if (layout.size() != g.vertex_count()) throw InvalidArgument("layout does not match graph");
  if (!all_finite(layout)) throw InvalidArgument("layout has non-finite coordinates");

  Aabb box = bounds_of(layout);
  if (box.empty()) box = Aabb{{0.0, 0.0}, {1.0, 1.0}};
  // A zero-extent side would give an empty viewBox.
  const double w = box.width() > 0.0 ? box.width() : 1.0;
  const double h = box.height() > 0.0 ? box.height() : 1.0;
  const double diagonal = std::hypot(box.width(), box.height());
  const double radius = style.vertex_radius.value_or(0.003 * (diagonal > 0.0 ? diagonal : 1.0));
  const double stroke = style.edge_width.value_or(radius / 3.0);

  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double view_x = box.min.x - mx;
  const double view_y = box.min.y - my;
  const double view_w = w + 2.0 * mx;
  const double view_h = h + 2.0 * my;
  const double pixel_h = style.pixel_width * view_h / view_w;

  auto num = [](double v) { return format_double(v); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(style.pixel_width) << "\" height=\"" << num(pixel_h) << "\" viewBox=\""
      << num(view_x) << ' ' << num(view_y) << ' ' << num(view_w) << ' ' << num(view_h)
      << "\">\n";
  out << "<g stroke=\"" << style.edge_color << "\" stroke-width=\"" << num(stroke)
      << "\" stroke-linecap=\"round\">\n";
  for (const Edge& e : g.edges()) {
    const Vec2 a = layout[e.first];
    const Vec2 b = layout[e.second];
    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
        << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"" << style.vertex_color << "\">\n";
  for (const Vec2 p : layout) {
    out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(radius)
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace rtfr
