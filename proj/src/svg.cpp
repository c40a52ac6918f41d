#include "triblock/svg.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace triblock {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kVertexRadius = 320.0;
constexpr double kLabelRadius = 352.0;
constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0;
  double y = 0;
};

// Vertex 0 at 90 degrees (top of the canvas), counterclockwise on screen;
// the y axis is flipped because SVG grows downwards.
Point vertex_point(int i, int n, double radius) {
  double angle = kPi / 2 + 2 * kPi * i / n;
  return {kCanvas / 2 + radius * std::cos(angle), kCanvas / 2 - radius * std::sin(angle)};
}

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

void append_line(std::string& out, Point a, Point b, const char* style) {
  out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const EdgeSet& b, const std::optional<EdgeSet>& overlay) {
  int n = b.polygon_size();
  std::vector<Point> at(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) at[static_cast<std::size_t>(i)] = vertex_point(i, n, kVertexRadius);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "  <rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  std::string boundary = "  <polygon points=\"";
  for (int i = 0; i < n; ++i) {
    if (i > 0) boundary += " ";
    boundary += fmt(at[static_cast<std::size_t>(i)].x) + "," + fmt(at[static_cast<std::size_t>(i)].y);
  }
  boundary += "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"2\"/>\n";
  out += boundary;

  if (overlay) {
    for (const Edge& e : overlay->edges()) {
      append_line(out, at[static_cast<std::size_t>(e.a)], at[static_cast<std::size_t>(e.b)], "stroke=\"#909090\" stroke-width=\"2\" stroke-dasharray=\"7 5\"");
    }
  }
  for (const Edge& e : b.edges()) {
    append_line(out, at[static_cast<std::size_t>(e.a)], at[static_cast<std::size_t>(e.b)], "stroke=\"#000000\" stroke-width=\"3\"");
  }

  for (int i = 0; i < n; ++i) {
    Point p = at[static_cast<std::size_t>(i)];
    out += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"5\" fill=\"#000000\"/>\n";
    Point lp = vertex_point(i, n, kLabelRadius);
    out += "  <text x=\"" + fmt(lp.x) + "\" y=\"" + fmt(lp.y) + "\" font-family=\"sans-serif\" font-size=\"22\" text-anchor=\"middle\" dominant-baseline=\"central\">" + std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace triblock
