#include "doodle/render_svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace doodle {

namespace {

constexpr double kSize = 400.0;
constexpr double kRadius = 160.0;

std::string num(double v) {
  char buf[32];
  // Avoid "-0.00" so equal diagrams render identically everywhere.
  if (std::abs(v) < 5e-3) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const ArrowDiagram& d) {
  const int m = static_cast<int>(d.endpoints().size());
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" "
        "height=\"400\" viewBox=\"0 0 400 400\">\n"
     << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
     << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333333\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n"
     << "  <circle cx=\"200\" cy=\"200\" r=\"" << num(kRadius)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  auto point = [&](int pos, double radius) {
    double angle = -M_PI / 2 + 2.0 * M_PI * pos / m;
    return std::pair<double, double>{kSize / 2 + radius * std::cos(angle),
                                     kSize / 2 + radius * std::sin(angle)};
  };

  for (int c = 0; c < d.size(); ++c) {
    auto [tx, ty] = point(d.position_of(c, Role::Tail), kRadius);
    auto [hx, hy] = point(d.position_of(c, Role::Head), kRadius);
    // Stop the arrow a little short of the head endpoint.
    double dx = hx - tx, dy = hy - ty;
    double len = std::hypot(dx, dy);
    double ex = hx, ey = hy;
    if (len > 12.0) {
      ex = hx - dx / len * 8.0;
      ey = hy - dy / len * 8.0;
    }
    os << "  <line x1=\"" << num(tx) << "\" y1=\"" << num(ty) << "\" x2=\"" << num(ex)
       << "\" y2=\"" << num(ey)
       << "\" stroke=\"#333333\" stroke-width=\"1.2\" marker-end=\"url(#arrow)\"/>\n";
    auto [lx, ly] = point(d.position_of(c, Role::Tail), kRadius + 16.0);
    os << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly)
       << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
          "dominant-baseline=\"middle\">"
       << (c + 1) << "</text>\n";
  }
  for (int p = 0; p < m; ++p) {
    auto [x, y] = point(p, kRadius);
    os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
       << "\" r=\"2.5\" fill=\"#000000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace doodle
