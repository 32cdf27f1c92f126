#include "tridisc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace tridisc {

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const CombinatorialDisc& disc, const Development& dev) {
  double min_x = std::numeric_limits<double>::max(), max_x = std::numeric_limits<double>::lowest();
  double min_y = min_x, max_y = max_x;
  for (const EisensteinPoint& p : dev.position) {
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }
  const double width = (max_x - min_x) * kScale + 2 * kMargin;
  const double height = (max_y - min_y) * kScale + 2 * kMargin;
  const auto sx = [&](const EisensteinPoint& p) { return fmt((p.x() - min_x) * kScale + kMargin); };
  const auto sy = [&](const EisensteinPoint& p) { return fmt((max_y - p.y()) * kScale + kMargin); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\">\n";
  out += "<g fill=\"#dde8f4\" fill-opacity=\"0.6\" stroke=\"#1f3b57\" stroke-width=\"1\">\n";
  for (const Triangle& t : disc.faces()) {
    out += "<polygon points=\"";
    for (int k = 0; k < 3; ++k) {
      const EisensteinPoint& p = dev.position[t[k]];
      if (k) out += ' ';
      out += sx(p) + ',' + sy(p);
    }
    out += "\"/>\n";
  }
  out += "</g>\n";
  const auto dot = [&](const EisensteinPoint& p, const char* color) {
    out += "<circle cx=\"" + sx(p) + "\" cy=\"" + sy(p) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
  };
  if (dev.cone_vertex) dot(dev.position[*dev.cone_vertex], "#c0392b");
  if (dev.p1) dot(*dev.p1, "#27ae60");
  if (dev.p2) dot(*dev.p2, "#8e44ad");
  out += "</svg>\n";
  return out;
}

}  // namespace tridisc
