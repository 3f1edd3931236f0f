#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "tropt/io.hpp"

namespace tropt::io {

namespace {

using location::LocationInstance;
using location::LocationSolution;
using location::Mode;
using location::PlanePoint;

struct Box {
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  bool started = false;

  void add(double x, double y) {
    if (!started) {
      x_lo = x_hi = x;
      y_lo = y_hi = y;
      started = true;
      return;
    }
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", v + 0.0);
  return buf;
}

// Plane coordinates map to SVG user units as (x1, -x2) so the figure
// keeps the mathematical orientation without a transform attribute.
double sx(double x1) { return x1; }
double sy(double x2) { return -x2; }

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* cls, const char* stroke, double width) {
  out << "  <line class=\"" << cls << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1)
      << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

}  // namespace

std::string render_svg(const LocationInstance& inst, const LocationSolution& sol) {
  const bool draw_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  const bool draw_strip = inst.mode == Mode::full || inst.mode == Mode::boundary;

  Box box;
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    const PlanePoint& r = inst.points[j];
    box.add(r.x1, r.x2);
    if (draw_bounds) {
      const double d = (*inst.distance_bounds)[j];
      box.add(r.x1 - d, r.x2 - d);
      box.add(r.x1 + d, r.x2 + d);
    }
  }
  if (draw_strip) {
    box.add(inst.strip->s, inst.points.front().x2);
    box.add(inst.strip->t, inst.points.front().x2);
  }
  for (const PlanePoint& v : sol.polyline) box.add(v.x1, v.x2);

  const double span =
      std::max({box.x_hi - box.x_lo, box.y_hi - box.y_lo, 1.0});
  const double pad = 0.1 * span;
  const double vx = box.x_lo - pad;
  const double vy = -(box.y_hi + pad);
  const double vw = (box.x_hi - box.x_lo) + 2.0 * pad;
  const double vh = (box.y_hi - box.y_lo) + 2.0 * pad;

  const double thin = span / 200.0;
  const double thick = span / 50.0;
  const double dot = span / 80.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' '
      << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\" width=\"640\" height=\""
      << num(640.0 * vh / vw) << "\">\n";

  // axes, clipped to the view box
  if (vx <= 0.0 && 0.0 <= vx + vw) {
    line(out, 0.0, vy, 0.0, vy + vh, "axis", "#b0b0b0", thin);
  }
  if (vy <= 0.0 && 0.0 <= vy + vh) {
    line(out, vx, 0.0, vx + vw, 0.0, "axis", "#b0b0b0", thin);
  }

  if (draw_strip) {
    line(out, sx(inst.strip->s), vy, sx(inst.strip->s), vy + vh, "strip", "#2060c0",
         thin);
    line(out, sx(inst.strip->t), vy, sx(inst.strip->t), vy + vh, "strip", "#2060c0",
         thin);
  }

  if (draw_bounds) {
    for (std::size_t j = 0; j < inst.points.size(); ++j) {
      const PlanePoint& r = inst.points[j];
      const double d = (*inst.distance_bounds)[j];
      out << "  <path class=\"diamond\" d=\"M " << num(sx(r.x1 + d)) << ' '
          << num(sy(r.x2)) << " L " << num(sx(r.x1)) << ' ' << num(sy(r.x2 + d))
          << " L " << num(sx(r.x1 - d)) << ' ' << num(sy(r.x2)) << " L "
          << num(sx(r.x1)) << ' ' << num(sy(r.x2 - d))
          << " Z\" fill=\"none\" stroke=\"#208040\" stroke-width=\"" << num(thin)
          << "\"/>\n";
    }
  }

  for (const PlanePoint& r : inst.points) {
    out << "  <circle class=\"demand\" cx=\"" << num(sx(r.x1)) << "\" cy=\""
        << num(sy(r.x2)) << "\" r=\"" << num(dot) << "\" fill=\"#202020\"/>\n";
  }

  const bool degenerate =
      std::all_of(sol.polyline.begin(), sol.polyline.end(),
                  [&](const PlanePoint& v) { return v == sol.polyline.front(); });
  if (degenerate) {
    out << "  <circle class=\"solution\" cx=\"" << num(sx(sol.endpoint0.x1))
        << "\" cy=\"" << num(sy(sol.endpoint0.x2)) << "\" r=\"" << num(dot * 1.2)
        << "\" fill=\"#c03020\"/>\n";
  } else {
    out << "  <polyline class=\"solution\" points=\"";
    for (std::size_t i = 0; i < sol.polyline.size(); ++i) {
      if (i) out << ' ';
      out << num(sx(sol.polyline[i].x1)) << ',' << num(sy(sol.polyline[i].x2));
    }
    out << "\" fill=\"none\" stroke=\"#c03020\" stroke-width=\"" << num(thick)
        << "\" stroke-linecap=\"round\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace tropt::io
