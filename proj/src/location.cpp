#include "tropt/location.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tropt::location {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_conformance(const LocationInstance& inst) {
  const std::size_t m = inst.points.size();
  if (m == 0) throw ConformanceError("instance needs at least one demand point");
  if (inst.addends.size() != m) {
    throw ConformanceError("addends length does not match point count");
  }
  if (inst.distance_bounds && inst.distance_bounds->size() != m) {
    throw ConformanceError("distance_bounds length does not match point count");
  }
}

void check_semantics(const LocationInstance& inst) {
  check_conformance(inst);
  for (const auto& r : inst.points) {
    if (!std::isfinite(r.x1) || !std::isfinite(r.x2)) {
      throw DegenerateInput("demand point coordinates must be finite");
    }
  }
  for (double w : inst.addends) {
    if (!std::isfinite(w)) throw DegenerateInput("addends must be finite");
  }
  if (inst.distance_bounds) {
    for (double d : *inst.distance_bounds) {
      if (!std::isfinite(d) || d < 0.0) {
        throw DegenerateInput("distance bounds must be finite and nonnegative");
      }
    }
  }
  if (inst.strip) {
    if (!std::isfinite(inst.strip->s) || !std::isfinite(inst.strip->t)) {
      throw DegenerateInput("strip boundaries must be finite");
    }
    if (inst.strip->s > inst.strip->t) {
      throw DegenerateInput("strip requires s <= t");
    }
  }
  const bool needs_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  const bool needs_strip = inst.mode == Mode::full || inst.mode == Mode::boundary;
  if (needs_bounds && !inst.distance_bounds) {
    throw DegenerateInput("mode requires distance bounds");
  }
  if (needs_strip && !inst.strip) {
    throw DegenerateInput("mode requires a strip");
  }
}

bool uses_strip(Mode mode) { return mode == Mode::full || mode == Mode::boundary; }

PlanePoint x_from_u(double u1, double u2, const std::optional<Strip>& strip, Mode mode) {
  if (uses_strip(mode)) {
    const double y1 = std::max(u1, u2 + 2.0 * strip->s);
    const double y2 = std::max(u1 - 2.0 * strip->t, u2);
    return from_chebyshev(ChebyshevPoint{y1, y2});
  }
  return from_chebyshev(ChebyshevPoint{u1, u2});
}

// Roots of the affine branch differences u1 - u2 - 2s and u1 - u2 - 2t,
// kept when they fall strictly inside (0, 1).
std::vector<double> strip_breakpoints(const AffineAlpha& u1, const AffineAlpha& u2,
                                      const Strip& strip) {
  std::vector<double> out;
  const double diff0 = u1.at0 - u2.at0;
  const double diff1 = u1.at1 - u2.at1;
  for (double level : {2.0 * strip.s, 2.0 * strip.t}) {
    const double a = diff0 - level;
    const double b = diff1 - diff0;
    if (b == 0.0) continue;
    const double root = -a / b;
    if (root > 1e-12 && root < 1.0 - 1e-12) out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            out.end());
  return out;
}

}  // namespace

double rect_distance(const PlanePoint& a, const PlanePoint& b) {
  return std::abs(a.x1 - b.x1) + std::abs(a.x2 - b.x2);
}

double evaluate_objective(const LocationInstance& inst, const PlanePoint& x) {
  check_conformance(inst);
  double best = -kInf;
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    best = std::max(best, rect_distance(x, inst.points[j]) + inst.addends[j]);
  }
  return best;
}

ChebyshevPoint to_chebyshev(const PlanePoint& x) {
  return ChebyshevPoint{x.x1 + x.x2, -x.x1 + x.x2};
}

PlanePoint from_chebyshev(const ChebyshevPoint& y) {
  return PlanePoint{(y.y1 - y.y2) / 2.0, (y.y1 + y.y2) / 2.0};
}

DerivedScalars derive_scalars(const LocationInstance& inst) {
  check_conformance(inst);
  DerivedScalars sc{-kInf, -kInf, kInf, kInf, -kInf, -kInf, kInf, kInf};
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    const double c1 = inst.points[j].x1 + inst.points[j].x2;
    const double c2 = -inst.points[j].x1 + inst.points[j].x2;
    const double w = inst.addends[j];
    sc.p1 = std::max(sc.p1, w + c1);
    sc.p2 = std::max(sc.p2, w + c2);
    sc.q1 = std::min(sc.q1, -w + c1);
    sc.q2 = std::min(sc.q2, -w + c2);
    if (inst.distance_bounds) {
      const double d = (*inst.distance_bounds)[j];
      sc.g1 = std::max(sc.g1, -d + c1);
      sc.g2 = std::max(sc.g2, -d + c2);
      sc.h1 = std::min(sc.h1, d + c1);
      sc.h2 = std::min(sc.h2, d + c2);
    }
  }
  return sc;
}

FeasibilityTerm feasibility_margin(const DerivedScalars& sc,
                                   const std::optional<Strip>& strip, Mode mode) {
  FeasibilityTerm worst{"none", -kInf};
  auto consider = [&worst](const char* label, double value) {
    if (value > worst.value) worst = FeasibilityTerm{label, value};
  };
  if (mode == Mode::full) {
    consider("g1-h1", sc.g1 - sc.h1);
    consider("g1-h2-2t", sc.g1 - sc.h2 - 2.0 * strip->t);
    consider("g2-h1+2s", sc.g2 - sc.h1 + 2.0 * strip->s);
    consider("g2-h2", sc.g2 - sc.h2);
  } else if (mode == Mode::distance) {
    consider("g1-h1", sc.g1 - sc.h1);
    consider("g2-h2", sc.g2 - sc.h2);
  }
  return worst;
}

bool check_feasibility(const DerivedScalars& sc, double s, double t, Mode mode) {
  return feasibility_margin(sc, Strip{s, t}, mode).value <= 0.0;
}

LocationSolution solve(const LocationInstance& inst) {
  check_semantics(inst);
  const DerivedScalars sc = derive_scalars(inst);

  const FeasibilityTerm margin = feasibility_margin(sc, inst.strip, inst.mode);
  if (margin.value > 0.0) {
    std::ostringstream msg;
    msg << "feasible region is empty: term " << margin.label << " = " << margin.value
        << " exceeds 0";
    throw Infeasible(msg.str(), margin.label, margin.value);
  }

  LocationSolution sol;
  switch (inst.mode) {
    case Mode::full: {
      const double s = inst.strip->s, t = inst.strip->t;
      sol.theta = std::max({(sc.p1 - sc.q1) / 2.0, (sc.p1 - sc.q2) / 2.0 - t,
                            (sc.p2 - sc.q1) / 2.0 + s, (sc.p2 - sc.q2) / 2.0,
                            sc.p1 - sc.h1, sc.p1 - sc.h2 - 2.0 * t,
                            sc.p2 - sc.h1 + 2.0 * s, sc.p2 - sc.h2,
                            sc.g1 - sc.q1, sc.g1 - sc.q2 - 2.0 * t,
                            sc.g2 - sc.q1 + 2.0 * s, sc.g2 - sc.q2});
      sol.u1 = AffineAlpha{std::max(sc.g1, sc.p1 - sol.theta),
                           std::min({sc.h1, sc.q1 + sol.theta, sc.h2 + 2.0 * t,
                                     sc.q2 + 2.0 * t + sol.theta})};
      sol.u2 = AffineAlpha{std::max(sc.g2, sc.p2 - sol.theta),
                           std::min({sc.h1 - 2.0 * s, sc.q1 - 2.0 * s + sol.theta,
                                     sc.h2, sc.q2 + sol.theta})};
      break;
    }
    case Mode::distance: {
      sol.theta = std::max({(sc.p1 - sc.q1) / 2.0, (sc.p2 - sc.q2) / 2.0,
                            sc.p1 - sc.h1, sc.p2 - sc.h2, sc.g1 - sc.q1,
                            sc.g2 - sc.q2});
      sol.u1 = AffineAlpha{std::max(sc.g1, sc.p1 - sol.theta),
                           std::min(sc.h1, sc.q1 + sol.theta)};
      sol.u2 = AffineAlpha{std::max(sc.g2, sc.p2 - sol.theta),
                           std::min(sc.h2, sc.q2 + sol.theta)};
      break;
    }
    case Mode::boundary: {
      const double s = inst.strip->s, t = inst.strip->t;
      sol.theta = std::max({sc.p1 - sc.q1, sc.p1 - sc.q2 - 2.0 * t,
                            sc.p2 - sc.q1 + 2.0 * s, sc.p2 - sc.q2}) /
                  2.0;
      sol.u1 = AffineAlpha{sc.p1 - sol.theta,
                           std::min(sc.q1, sc.q2 + 2.0 * t) + sol.theta};
      sol.u2 = AffineAlpha{sc.p2 - sol.theta,
                           std::min(sc.q1 - 2.0 * s, sc.q2) + sol.theta};
      break;
    }
    case Mode::unconstrained: {
      sol.theta = std::max(sc.p1 - sc.q1, sc.p2 - sc.q2) / 2.0;
      sol.u1 = AffineAlpha{sc.p1 - sol.theta, sc.q1 + sol.theta};
      sol.u2 = AffineAlpha{sc.p2 - sol.theta, sc.q2 + sol.theta};
      break;
    }
  }

  if (uses_strip(inst.mode)) {
    sol.alpha_breakpoints = strip_breakpoints(sol.u1, sol.u2, *inst.strip);
  }
  sol.polyline.reserve(sol.alpha_breakpoints.size() + 2);
  sol.polyline.push_back(x_from_u(sol.u1.at0, sol.u2.at0, inst.strip, inst.mode));
  for (double alpha : sol.alpha_breakpoints) {
    sol.polyline.push_back(x_from_u(sol.u1(alpha), sol.u2(alpha), inst.strip, inst.mode));
  }
  sol.polyline.push_back(x_from_u(sol.u1.at1, sol.u2.at1, inst.strip, inst.mode));
  sol.endpoint0 = sol.polyline.front();
  sol.endpoint1 = sol.polyline.back();
  return sol;
}

solver::BoxConstrainedProblem build_tropical_problem(const LocationInstance& inst) {
  check_semantics(inst);
  const DerivedScalars sc = derive_scalars(inst);
  using maxplus::TropScalar;
  using maxplus::TropVector;

  const TropVector p = TropVector::column({sc.p1, sc.p2});
  const TropVector q = TropVector::column({sc.q1, sc.q2});
  const auto strip_matrix = [&inst] {
    maxplus::TropMatrix b(2, 2);
    b(0, 1) = TropScalar{2.0 * inst.strip->s};
    b(1, 0) = TropScalar{-2.0 * inst.strip->t};
    return b;
  };

  switch (inst.mode) {
    case Mode::full:
      return solver::BoxConstrainedProblem::full(
          p, q, TropVector::column({sc.g1, sc.g2}),
          TropVector::column({sc.h1, sc.h2}), strip_matrix());
    case Mode::distance:
      return solver::BoxConstrainedProblem::box_only(
          p, q, TropVector::column({sc.g1, sc.g2}),
          TropVector::column({sc.h1, sc.h2}));
    case Mode::boundary:
      return solver::BoxConstrainedProblem::inequality_only(p, q, strip_matrix());
    case Mode::unconstrained:
      return solver::BoxConstrainedProblem::unconstrained(p, q);
  }
  throw DegenerateInput("unknown location mode");
}

LocationInstance cctv_instance(const std::vector<Camera>& cameras, double cable_length,
                               std::optional<Strip> strip) {
  if (cameras.empty()) throw ConformanceError("need at least one camera");
  if (!std::isfinite(cable_length)) throw BoundsError("cable length must be finite");
  LocationInstance inst;
  inst.points.reserve(cameras.size());
  inst.addends.reserve(cameras.size());
  std::vector<double> bounds;
  bounds.reserve(cameras.size());
  for (std::size_t j = 0; j < cameras.size(); ++j) {
    const Camera& cam = cameras[j];
    if (!(cam.height >= 0.0)) {
      std::ostringstream msg;
      msg << "camera " << (j + 1) << " has negative height " << cam.height;
      throw BoundsError(msg.str());
    }
    if (cam.height > cable_length) {
      std::ostringstream msg;
      msg << "camera " << (j + 1) << " is out of cable reach: height " << cam.height
          << " exceeds cable length " << cable_length;
      throw BoundsError(msg.str());
    }
    inst.points.push_back(PlanePoint{cam.x1, cam.x2});
    inst.addends.push_back(cam.height);
    bounds.push_back(cable_length - cam.height);
  }
  inst.distance_bounds = std::move(bounds);
  inst.strip = strip;
  inst.mode = strip ? Mode::full : Mode::distance;
  return inst;
}

}  // namespace tropt::location
