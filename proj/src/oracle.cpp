#include "tropt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tropt::oracle {

namespace {

using location::LocationInstance;
using location::LocationSolution;
using location::Mode;
using location::PlanePoint;

// Worst constraint excess of the instance's active constraints at x;
// zero or negative means feasible.
double constraint_excess(const LocationInstance& inst, const PlanePoint& x) {
  double excess = -std::numeric_limits<double>::infinity();
  const bool use_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  const bool use_strip = inst.mode == Mode::full || inst.mode == Mode::boundary;
  if (use_bounds) {
    for (std::size_t j = 0; j < inst.points.size(); ++j) {
      excess = std::max(excess, location::rect_distance(x, inst.points[j]) -
                                    (*inst.distance_bounds)[j]);
    }
  }
  if (use_strip) {
    excess = std::max(excess, inst.strip->s - x.x1);
    excess = std::max(excess, x.x1 - inst.strip->t);
  }
  return excess;
}

// Grid points carry rounding noise of roughly one ulp per coordinate;
// this slack keeps exactly-tight constraints from flickering.
constexpr double kFeasSlack = 1e-9;

double real_of(const maxplus::TropScalar& s) { return s.value(); }

}  // namespace

GridSpec GridSpec::make(double x1_lo, double x1_hi, double x2_lo, double x2_hi,
                        double step) {
  if (!(x1_lo <= x1_hi) || !(x2_lo <= x2_hi)) {
    throw DegenerateInput("grid ranges must be non-empty");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DegenerateInput("grid step must be positive");
  }
  GridSpec grid{x1_lo, x1_hi, x2_lo, x2_hi, step, false};
  while (grid.point_count() > kMaxGridPoints) {
    grid.step *= 2.0;
    grid.coarsened = true;
  }
  return grid;
}

std::size_t GridSpec::count_x1() const {
  return static_cast<std::size_t>(std::floor((x1_hi - x1_lo) / step + 1e-9)) + 1;
}

std::size_t GridSpec::count_x2() const {
  return static_cast<std::size_t>(std::floor((x2_hi - x2_lo) / step + 1e-9)) + 1;
}

GridSpec auto_grid(const LocationInstance& inst, double step) {
  double x1_lo = inst.points.front().x1, x1_hi = x1_lo;
  double x2_lo = inst.points.front().x2, x2_hi = x2_lo;
  double w_min = inst.addends.front();
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    x1_lo = std::min(x1_lo, inst.points[j].x1);
    x1_hi = std::max(x1_hi, inst.points[j].x1);
    x2_lo = std::min(x2_lo, inst.points[j].x2);
    x2_hi = std::max(x2_hi, inst.points[j].x2);
    w_min = std::min(w_min, inst.addends[j]);
  }

  double radius;
  const bool use_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  if (use_bounds && inst.distance_bounds) {
    radius = *std::max_element(inst.distance_bounds->begin(),
                               inst.distance_bounds->end());
  } else {
    PlanePoint anchor{(x1_lo + x1_hi) / 2.0, (x2_lo + x2_hi) / 2.0};
    if (inst.strip) anchor.x1 = std::clamp(anchor.x1, inst.strip->s, inst.strip->t);
    // Every optimal point lies within the anchor's objective value of
    // each demand point, minus whatever a negative addend gives back.
    radius = location::evaluate_objective(inst, anchor) - std::min(0.0, w_min);
  }
  // a degenerate instance (single point, zero addend) still needs a grid
  radius = std::max({radius, 1.0, 10.0 * step});

  GridSpec raw;
  raw.x1_lo = x1_lo - radius;
  raw.x1_hi = x1_hi + radius;
  raw.x2_lo = x2_lo - radius;
  raw.x2_hi = x2_hi + radius;
  if (inst.strip) {
    raw.x1_lo = std::min(raw.x1_lo, inst.strip->s - step);
    raw.x1_hi = std::max(raw.x1_hi, inst.strip->t + step);
  }
  return GridSpec::make(raw.x1_lo, raw.x1_hi, raw.x2_lo, raw.x2_hi, step);
}

GridResult grid_minimize(const LocationInstance& inst, const GridSpec& grid) {
  const std::size_t n1 = grid.count_x1();
  const std::size_t n2 = grid.count_x2();

  GridResult result;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n1; ++i) {
    const double x1 = grid.x1_lo + static_cast<double>(i) * grid.step;
    for (std::size_t j = 0; j < n2; ++j) {
      const PlanePoint x{x1, grid.x2_lo + static_cast<double>(j) * grid.step};
      if (constraint_excess(inst, x) > kFeasSlack) continue;
      ++result.feasible_count;
      best = std::min(best, location::evaluate_objective(inst, x));
    }
  }
  if (result.feasible_count == 0) {
    throw EmptyFeasible("no feasible point on the grid");
  }
  if (result.feasible_count < 100) {
    std::ostringstream msg;
    msg << "only " << result.feasible_count
        << " feasible grid points sampled; refine the step";
    throw GridTooCoarse(msg.str());
  }
  result.theta_hat = best;

  // Second pass in the same order keeps the minimizer list lexicographic.
  for (std::size_t i = 0; i < n1; ++i) {
    const double x1 = grid.x1_lo + static_cast<double>(i) * grid.step;
    for (std::size_t j = 0; j < n2; ++j) {
      const PlanePoint x{x1, grid.x2_lo + static_cast<double>(j) * grid.step};
      if (constraint_excess(inst, x) > kFeasSlack) continue;
      if (location::evaluate_objective(inst, x) <= best + grid.step) {
        result.minimizers.push_back(x);
      }
    }
  }
  return result;
}

VerificationReport verify_solution(const LocationInstance& inst,
                                   const LocationSolution& sol, double tol,
                                   const GridSpec& grid) {
  VerificationReport report;
  report.theta_closed_form = sol.theta;
  report.max_constraint_violation = 0.0;
  report.max_objective_gap_on_solution_set = 0.0;

  for (const PlanePoint& v : sol.polyline) {
    const double excess = std::max(0.0, constraint_excess(inst, v));
    if (excess > tol) report.counterexamples.push_back(v);
    report.max_constraint_violation = std::max(report.max_constraint_violation, excess);
    const double gap = std::abs(location::evaluate_objective(inst, v) - sol.theta);
    report.max_objective_gap_on_solution_set =
        std::max(report.max_objective_gap_on_solution_set, gap);
  }

  const GridResult grid_result = grid_minimize(inst, grid);
  report.theta_grid = grid_result.theta_hat;

  // The grid scans a subset of the feasible set, so anything clearly
  // below the claimed optimum disproves optimality; 2*step absorbs
  // quantization of the 1-Lipschitz-per-coordinate objective.
  const bool grid_ok = report.theta_grid >= sol.theta - tol - 2.0 * grid.step;
  if (!grid_ok) {
    report.counterexamples.insert(report.counterexamples.end(),
                                  grid_result.minimizers.begin(),
                                  grid_result.minimizers.end());
  }

  const bool pass = report.max_constraint_violation <= tol &&
                    report.max_objective_gap_on_solution_set <= tol && grid_ok;
  report.verdict = pass ? Verdict::pass : Verdict::fail;
  return report;
}

double u_box_scan(const solver::BoxConstrainedProblem& prob,
                  const solver::TropSolverResult& result, int samples_per_dim) {
  using maxplus::TropScalar;
  using maxplus::TropVector;
  using solver::ConstraintMode;

  if (samples_per_dim < 1) throw DegenerateInput("need at least one sample per dim");
  const std::size_t n = result.u_lower.size();
  const std::size_t steps = static_cast<std::size_t>(samples_per_dim);
  const double theta = result.theta.value();

  const bool use_inequality = prob.mode == ConstraintMode::full ||
                              prob.mode == ConstraintMode::inequality_only;
  const bool use_box =
      prob.mode == ConstraintMode::full || prob.mode == ConstraintMode::box_only;

  double max_deviation = 0.0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<TropScalar> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const TropScalar& lo = result.u_lower[i];
      const TropScalar& hi = result.u_upper[i];
      if (lo.is_bottom()) {
        u.push_back(hi);
      } else if (steps == 1 || lo == hi) {
        u.push_back(lo);
      } else {
        const double tau = static_cast<double>(idx[i]) / (steps - 1);
        u.push_back(TropScalar{(1.0 - tau) * lo.value() + tau * hi.value()});
      }
    }
    const TropVector x = mat_mul(result.b_star, TropVector(std::move(u)));
    const double value = real_of(solver::objective(x, prob.p, prob.q));
    max_deviation = std::max(max_deviation, std::abs(value - theta));

    if (use_inequality) {
      const TropVector bx = mat_mul(prob.B, x);
      for (std::size_t i = 0; i < n; ++i) {
        if (bx[i].is_bottom()) continue;
        if (bx[i].value() > x[i].value() + 1e-9) {
          throw Error("u_box_scan: Bx <= x violated at a sampled solution");
        }
      }
    }
    if (use_box) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!prob.g[i].is_bottom() && prob.g[i].value() > x[i].value() + 1e-9) {
          throw Error("u_box_scan: lower bound g <= x violated at a sampled solution");
        }
        if (x[i].value() > prob.h[i].value() + 1e-9) {
          throw Error("u_box_scan: upper bound x <= h violated at a sampled solution");
        }
      }
    }

    // odometer
    std::size_t d = 0;
    while (d < n && ++idx[d] == steps) {
      idx[d] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return max_deviation;
}

maxplus::TropMatrix definitional_star(const maxplus::TropMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("definitional_star: matrix not square");
  const std::size_t n = a.rows();
  maxplus::TropMatrix acc = maxplus::TropMatrix::identity(n);
  maxplus::TropMatrix power = maxplus::TropMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, a);
    acc = mat_add(acc, power);
  }
  return acc;
}

}  // namespace tropt::oracle
