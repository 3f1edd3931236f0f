#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropt/solver.hpp"

// Constrained minimax single-facility location on the plane under
// rectilinear distance with per-point addends. The closed-form solution
// works in 45-degree rotated (Chebyshev) coordinates; everything here is
// expressed in conventional reals, with build_tropical_problem bridging
// to the max-plus solver for cross-checks. Pure and re-entrant.
namespace tropt::location {

struct PlanePoint {
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
};

// Rotated coordinates y1 = x1 + x2, y2 = -x1 + x2; the round trip with
// plane coordinates is an exact linear bijection.
struct ChebyshevPoint {
  double y1 = 0.0;
  double y2 = 0.0;
};

enum class Mode { full, distance, boundary, unconstrained };

// Vertical feasible band s <= x1 <= t. s == t (a line) is allowed.
struct Strip {
  double s = 0.0;
  double t = 0.0;
};

struct LocationInstance {
  std::vector<PlanePoint> points;                      // demand points r_j, m >= 1
  std::vector<double> addends;                         // w_j, same length
  std::optional<std::vector<double>> distance_bounds;  // d_j >= 0, same length
  std::optional<Strip> strip;
  Mode mode = Mode::unconstrained;
};

// The eight scalars that drive every closed form:
//   p_i = max_j (w_j + c_ij),  q_i = min_j (-w_j + c_ij),
//   g_i = max_j (-d_j + c_ij), h_i = min_j (d_j + c_ij),
// with c_1j = r_1j + r_2j and c_2j = -r_1j + r_2j. When no distance
// bounds are given, g is -inf and h is +inf; the solve modes that would
// read them never do.
struct DerivedScalars {
  double p1, p2, q1, q2, g1, g2, h1, h2;
};

// Affine function of the solution parameter alpha in [0, 1].
struct AffineAlpha {
  double at0 = 0.0;
  double at1 = 0.0;

  double operator()(double alpha) const { return (1.0 - alpha) * at0 + alpha * at1; }
};

// Optimal value plus the one-parameter optimal set. The set is a
// piecewise-linear curve in alpha; polyline lists x(0), the interior
// branch-switch points, and x(1) in order.
struct LocationSolution {
  double theta = 0.0;
  AffineAlpha u1, u2;
  std::vector<double> alpha_breakpoints;  // interior switches, ascending
  std::vector<PlanePoint> polyline;
  PlanePoint endpoint0, endpoint1;  // polyline front and back
};

// |a1 - b1| + |a2 - b2|.
double rect_distance(const PlanePoint& a, const PlanePoint& b);

// max_j (rect_distance(x, r_j) + w_j).
double evaluate_objective(const LocationInstance& inst, const PlanePoint& x);

ChebyshevPoint to_chebyshev(const PlanePoint& x);
PlanePoint from_chebyshev(const ChebyshevPoint& y);

// Throws ConformanceError when list lengths disagree or m == 0.
DerivedScalars derive_scalars(const LocationInstance& inst);

// Worst term of the mode's feasibility condition, with a printable name.
struct FeasibilityTerm {
  std::string label;
  double value = 0.0;
};

// Largest of the four terms max(g1-h1, g1-h2-2t, g2-h1+2s, g2-h2) in
// full mode, of the first and last in distance mode; modes without
// distance bounds are always feasible (reported as a -inf margin).
FeasibilityTerm feasibility_margin(const DerivedScalars& sc,
                                   const std::optional<Strip>& strip, Mode mode);

// True iff the mode's feasibility condition holds (margin <= 0).
bool check_feasibility(const DerivedScalars& sc, double s, double t, Mode mode);

// Closed-form solve in the instance's mode. Throws Infeasible naming the
// violating feasibility term, DegenerateInput on invariant breaches.
LocationSolution solve(const LocationInstance& inst);

// The n = 2 max-plus problem equivalent to the instance. Constraint
// parts that are absent become sentinels (all-bottom g or B, huge h) and
// the instance mode maps onto the matching solver mode.
solver::BoxConstrainedProblem build_tropical_problem(const LocationInstance& inst);

struct Camera {
  double x1 = 0.0;
  double x2 = 0.0;
  double height = 0.0;
};

// Monitoring-facility placement: addends are camera heights, each
// distance bound is cable_length - height. Throws BoundsError when a
// camera sits above cable reach (or below the floor).
LocationInstance cctv_instance(const std::vector<Camera>& cameras, double cable_length,
                               std::optional<Strip> strip);

}  // namespace tropt::location
