#pragma once

#include <cstddef>
#include <vector>

#include "tropt/location.hpp"
#include "tropt/solver.hpp"

// Independent brute-force checks for the closed forms: plane grid
// search, exhaustive parameter-box scans, and a term-by-term Kleene-star
// reimplementation. Deliberately naive; correctness over speed, desk
// scale only.
namespace tropt::oracle {

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

// Rectangular evaluation lattice. make() widens the step (doubling) as
// needed to respect the global point cap and flags when it did.
struct GridSpec {
  double x1_lo = 0.0, x1_hi = 0.0;
  double x2_lo = 0.0, x2_hi = 0.0;
  double step = 0.01;
  bool coarsened = false;

  static GridSpec make(double x1_lo, double x1_hi, double x2_lo, double x2_hi,
                       double step);

  std::size_t count_x1() const;
  std::size_t count_x2() const;
  std::size_t point_count() const { return count_x1() * count_x2(); }
};

// Bounding box of the demand points, inflated by the largest distance
// bound when bounds exist and otherwise by the objective value at a
// strip-clamped centroid; the x1 range is widened to cover the strip.
GridSpec auto_grid(const location::LocationInstance& inst, double step);

struct GridResult {
  double theta_hat = 0.0;
  // Feasible grid points within one step of theta_hat, in scan order
  // (ascending x1, then x2), so ties resolve lexicographically.
  std::vector<location::PlanePoint> minimizers;
  std::size_t feasible_count = 0;
};

// Minimum of the objective over feasible grid points. Throws
// EmptyFeasible when no grid point is feasible and GridTooCoarse when
// fewer than 100 are.
GridResult grid_minimize(const location::LocationInstance& inst, const GridSpec& grid);

enum class Verdict { pass, fail };

struct VerificationReport {
  double theta_closed_form = 0.0;
  double theta_grid = 0.0;
  double max_constraint_violation = 0.0;
  double max_objective_gap_on_solution_set = 0.0;
  Verdict verdict = Verdict::fail;
  // Polyline vertices that violate a constraint, then grid points that
  // beat the claimed optimum beyond the quantization slack.
  std::vector<location::PlanePoint> counterexamples;
};

// Checks that every polyline vertex is feasible and attains sol.theta
// within tol, and that the grid finds nothing below theta - tol - 2*step.
VerificationReport verify_solution(const location::LocationInstance& inst,
                                   const location::LocationSolution& sol, double tol,
                                   const GridSpec& grid);

// Max |objective(B* u) - theta| over a samples_per_dim^n lattice of u in
// [u_lower, u_upper]. Also re-checks the constraints that the problem
// mode activates at every sample and throws Error on a violation.
double u_box_scan(const solver::BoxConstrainedProblem& prob,
                  const solver::TropSolverResult& result, int samples_per_dim);

// Literal accumulation I (+) A (+) ... (+) A^{n-1}, term by term, kept
// independent of maxplus::kleene_star internals.
maxplus::TropMatrix definitional_star(const maxplus::TropMatrix& a);

}  // namespace tropt::oracle
