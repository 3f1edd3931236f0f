#pragma once

#include <cstddef>
#include <vector>

#include "tropt/maxplus.hpp"

// Closed-form solver for the box-and-inequality constrained problem
//
//   minimize   x^- p (+) q^- x
//   subject to B x <= x,  g <= x <= h
//
// over regular vectors x in the max-plus semifield, in any dimension n,
// together with the reduced variants obtained by dropping constraints.
// Pure functions over immutable inputs; safe for parallel batch solving.
namespace tropt::solver {

using maxplus::TropMatrix;
using maxplus::TropScalar;
using maxplus::TropVector;

enum class ConstraintMode { full, inequality_only, box_only, unconstrained };

// Finite stand-in for "no upper bound": large enough to never win a max
// at desk scale, yet exactly representable so reduced problems can be
// pushed through the full machinery without changing any result.
inline constexpr double kHugeBound = 0x1p40;

struct BoxConstrainedProblem {
  TropVector p;  // column, n; nonzero
  TropVector q;  // column, n; regular
  TropVector g;  // column, n; may contain bottom entries
  TropVector h;  // column, n; regular when consumed
  TropMatrix B;  // n x n
  ConstraintMode mode = ConstraintMode::full;

  static BoxConstrainedProblem full(TropVector p, TropVector q, TropVector g,
                                    TropVector h, TropMatrix B);
  static BoxConstrainedProblem inequality_only(TropVector p, TropVector q, TropMatrix B);
  static BoxConstrainedProblem box_only(TropVector p, TropVector q, TropVector g,
                                        TropVector h);
  static BoxConstrainedProblem unconstrained(TropVector p, TropVector q);

  std::size_t dim() const { return p.size(); }

  // Same constraint set expressed in full mode: absent parts are widened
  // to no-ops (all-bottom g or B, all-huge h). Used to cross-check the
  // reduced closed forms against the general one.
  BoxConstrainedProblem as_full_encoding() const;
};

// Canonical "constraint absent" vectors.
TropVector bottom_vector(std::size_t n);
TropVector huge_vector(std::size_t n);

// x^- p (+) q^- x for regular x.
TropScalar objective(const TropVector& x, const TropVector& p, const TropVector& q);

struct TropSolverResult {
  TropScalar theta;      // minimum objective value, always finite
  TropMatrix b_star;     // asterate used by the solution map x = B* u
  TropVector u_lower;    // column bounds of the parameter box
  TropVector u_upper;
};

// Full problem. Throws StarDiverges when Tr(B) > 1, Infeasible when
// h^- B* g > 1 (the error names the offending term), DegenerateInput
// when p is zero or q/h are not regular.
TropSolverResult solve_full(const BoxConstrainedProblem& prob);

// theta = (q^- B* p)^{1/2}; u in [theta^{-1} p, theta (q^- B*)^-].
TropSolverResult solve_inequality_only(const BoxConstrainedProblem& prob);

// theta = (q^- p)^{1/2} (+) h^- p (+) q^- g; box directly on x (B* = I).
TropSolverResult solve_box_only(const BoxConstrainedProblem& prob);

// theta = (q^- p)^{1/2}; x in [theta^{-1} p, theta q].
TropSolverResult solve_unconstrained(const BoxConstrainedProblem& prob);

// Dispatch on prob.mode.
TropSolverResult solve(const BoxConstrainedProblem& prob);

// count vectors x = B* u with u interpolated entry-wise (conventional
// linear interpolation) between u_lower and u_upper, endpoints included.
// Coordinates whose lower bound is bottom are pinned to the upper bound
// so every emitted solution is regular.
std::vector<TropVector> sample_solutions(const TropSolverResult& result,
                                         std::size_t count);

}  // namespace tropt::solver
