#pragma once

// Static SVG drawing of a point configuration: one polygon per onion layer,
// labelled points, and optionally the rooted triangles.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "cg4/core.hpp"
#include "cg4/planar.hpp"

namespace cg4 {

struct SvgOptions {
  int size = 400;   // width and height in pixels
  int margin = 30;
  bool triangles = false;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_svg(const PointConfig& x, const SvgOptions& opt = {}) {
  const std::string size = std::to_string(opt.size);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
                    "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  if (x.size() == 0) return svg + "</svg>\n";

  // Coordinates are converted to floating point only for drawing.
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : x.points()) pts.emplace_back(p.x.convert_to<double>(), p.y.convert_to<double>());
  double minx = pts[0].first, maxx = minx, miny = pts[0].second, maxy = miny;
  for (const auto& [px, py] : pts) {
    minx = std::min(minx, px), maxx = std::max(maxx, px);
    miny = std::min(miny, py), maxy = std::max(maxy, py);
  }
  const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = (opt.size - 2.0 * opt.margin) / extent;
  auto sx = [&](double v) { return detail::fmt(opt.margin + (v - minx) * scale); };
  auto sy = [&](double v) { return detail::fmt(opt.size - opt.margin - (v - miny) * scale); };
  auto coords = [&](const std::vector<Element>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      s += (i ? " " : "") + sx(pts[ids[i]].first) + "," + sy(pts[ids[i]].second);
    }
    return s;
  };

  if (opt.triangles) {
    for (const auto& t : extract_geometry(x).triangles()) {
      svg += "  <polygon class=\"triangle\" points=\"" + coords(t.base.to_vector()) +
             "\" fill=\"none\" stroke=\"#c33\" stroke-opacity=\"0.25\"/>\n";
    }
  }
  for (const auto& layer : geometric_onion(x)) {
    if (layer.size() < 2) continue;
    svg += "  <polygon class=\"layer\" points=\"" + coords(layer) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string cx = sx(pts[i].first);
    const std::string cy = sy(pts[i].second);
    svg += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"3\"/>\n";
    svg += "  <text x=\"" + cx + "\" y=\"" + cy + "\" dx=\"5\" dy=\"-5\" font-size=\"12\">" +
           detail::escape_xml(x.ground().label(static_cast<Element>(i))) + "</text>\n";
  }
  return svg + "</svg>\n";
}

}  // namespace cg4
