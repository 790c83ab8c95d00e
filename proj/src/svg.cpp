#include "tileprove/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tileprove/verify.hpp"

namespace tileprove {

std::string svg_string(const Tiling& t, bool with_coloring) {
  // Cartesian embedding of the basis from the Gram matrix.
  const double g11 = t.gram[0].to_double();
  const double g12 = t.gram[1].to_double();
  const double g22 = t.gram[2].to_double();
  const double e1x = std::sqrt(g11);
  const double e2x = g12 / e1x;
  const double e2y = std::sqrt(std::max(0.0, g22 - e2x * e2x));

  std::vector<std::pair<double, double>> xy;
  xy.reserve(t.points.size());
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : t.points) {
    double u = p[0].to_double(), v = p[1].to_double();
    double x = u * e1x + v * e2x;
    double y = v * e2y;
    xy.emplace_back(x, y);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double w = std::max(xmax - xmin, 1e-9);
  const double h = std::max(ymax - ymin, 1e-9);
  const double scale = 640.0 / std::max(w, h);
  const double pad = 8.0;

  ColoringReport coloring;
  if (with_coloring) coloring = coloring_number(t);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << w * scale + 2 * pad << "\" height=\"" << h * scale + 2 * pad
     << "\" viewBox=\"0 0 " << w * scale + 2 * pad << " "
     << h * scale + 2 * pad << "\">\n";
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& tri = t.tiles[i];
    os << "  <polygon points=\"";
    for (int j = 0; j < 3; ++j) {
      auto [x, y] = xy[tri[j]];
      // flip y for screen coordinates
      os << (x - xmin) * scale + pad << "," << (ymax - y) * scale + pad;
      if (j < 2) os << " ";
    }
    const char* fill = "#e8e8e8";
    if (with_coloring && coloring.colorable)
      fill = coloring.black[i] ? "#404040" : "#ffffff";
    os << "\" fill=\"" << fill << "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void to_svg(const Tiling& t, const std::string& path, bool with_coloring) {
  if (path.empty()) throw std::runtime_error("empty SVG output path");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << svg_string(t, with_coloring);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tileprove
