#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rtfr/graph.hpp"
#include "rtfr/layout.hpp"

namespace rtfr {

struct SvgStyle {
  std::string edge_color = "#6b6b6b";
  std::string vertex_color = "#1f4e9c";
  /// Defaults to 0.3% of the layout bounding-box diagonal.
  std::optional<double> vertex_radius;
  /// Defaults to a third of the vertex radius.
  std::optional<double> edge_width;
  /// Rendered width in pixels; height follows the aspect ratio.
  double pixel_width = 1024.0;
};

/// One <line> per edge followed by one <circle> per vertex, in a viewBox
/// fitted to the layout bounding box plus a 5% margin. Output bytes depend
/// only on the inputs.
void export_svg(std::ostream& out, const Graph& g, const Layout& layout,
                const SvgStyle& style = {});

}  // namespace rtfr
