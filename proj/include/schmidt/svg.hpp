#pragma once

// SVG output for a circle set inside a window. The window fills the view box
// with the y axis flipped; numbers carry 9 significant digits, so equal
// inputs give byte-identical files.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/arrangement.hpp"
#include "schmidt/circle.hpp"

namespace schmidt {

struct RenderOptions {
  double width_px = 1000;
  double stroke_scale = 0.02;  // stroke width as a fraction of the radius
  double min_stroke = 0.2;
  std::string color = "#000000";
  std::string ghost_color = "#d00000";
  double ghost_stroke = 2;
};

namespace detail {

inline std::string fmt9(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/// Clips the line {p : n.p = k} (|n| = 1) to the rectangle; returns the two
/// endpoints if it crosses.
inline std::optional<std::array<double, 4>> clip_line(double nx, double ny, double k, double x0, double x1, double y0,
                                                      double y1) {
  std::vector<std::pair<double, double>> pts;
  auto add = [&](double x, double y) {
    for (auto& p : pts)
      if (std::abs(p.first - x) < 1e-12 && std::abs(p.second - y) < 1e-12) return;
    pts.emplace_back(x, y);
  };
  if (std::abs(ny) > 1e-15) {
    for (double x : {x0, x1}) {
      const double y = (k - nx * x) / ny;
      if (y >= y0 - 1e-12 && y <= y1 + 1e-12) add(x, y);
    }
  }
  if (std::abs(nx) > 1e-15) {
    for (double y : {y0, y1}) {
      const double x = (k - ny * y) / nx;
      if (x >= x0 - 1e-12 && x <= x1 + 1e-12) add(x, y);
    }
  }
  if (pts.size() < 2) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  return std::array<double, 4>{pts.front().first, pts.front().second, pts.back().first, pts.back().second};
}

}  // namespace detail

inline std::string render_svg(const CircleSet& set, const Window& w, const std::optional<GhostCircle>& ghost,
                              const RenderOptions& opt = {}) {
  const double x0 = w.x0.to_double(), x1 = w.x1.to_double(), y0 = w.y0.to_double(), y1 = w.y1.to_double();
  const double scale = opt.width_px / (x1 - x0);
  const double height_px = (y1 - y0) * scale;
  auto px = [&](double x) { return (x - x0) * scale; };
  auto py = [&](double y) { return (y1 - y) * scale; };
  auto stroke = [&](double r_px) { return std::max(opt.min_stroke, opt.stroke_scale * r_px); };
  using detail::fmt9;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt9(opt.width_px) + "\" height=\"" + fmt9(height_px) +
       "\" viewBox=\"0 0 " + fmt9(opt.width_px) + " " + fmt9(height_px) + "\">\n";
  s += "<g fill=\"none\" stroke=\"" + opt.color + "\">\n";
  for (const auto& [key, p] : set) {
    const OrientedCircle& c = p.circle;
    if (c.is_line()) {
      // Im(zeta conj z) + c' sqrt(D)/2 = 0, i.e. zi x - zr y = -c' sqrt(D)/2
      const double sd = std::sqrt(static_cast<double>(c.disc().abs_value()));
      const double zr = c.zeta.trace().convert_to<double>() / 2, zi = c.zeta.b().convert_to<double>() * sd / 2;
      const double k = -c.cocurv.convert_to<double>() * sd / 2;
      const auto seg = detail::clip_line(zi, -zr, k, x0, x1, y0, y1);
      if (!seg) continue;
      s += "<line x1=\"" + fmt9(px((*seg)[0])) + "\" y1=\"" + fmt9(py((*seg)[1])) + "\" x2=\"" + fmt9(px((*seg)[2])) +
           "\" y2=\"" + fmt9(py((*seg)[3])) + "\" stroke-width=\"" + fmt9(stroke(opt.width_px / 100)) + "\"/>\n";
      continue;
    }
    const FloatCircle fc = float_shadow(c);
    const double r = fc.r * scale;
    s += "<circle cx=\"" + fmt9(px(fc.x)) + "\" cy=\"" + fmt9(py(fc.y)) + "\" r=\"" + fmt9(r) + "\" stroke-width=\"" +
         fmt9(stroke(r)) + "\"/>\n";
  }
  s += "</g>\n";
  if (ghost) {
    const FloatCircle g = ghost->shadow();
    const double r = g.r * scale;
    s += "<circle cx=\"" + fmt9(px(g.x)) + "\" cy=\"" + fmt9(py(g.y)) + "\" r=\"" + fmt9(r) + "\" fill=\"none\" stroke=\"" +
         opt.ghost_color + "\" stroke-width=\"" + fmt9(opt.ghost_stroke) + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace schmidt
