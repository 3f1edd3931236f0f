#include "tropt/solver.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tropt::solver {

namespace {

using maxplus::conjugate;
using maxplus::entrywise_leq;
using maxplus::kleene_star;
using maxplus::mat_mul;
using maxplus::Orient;
using maxplus::scale;
using maxplus::tadd;
using maxplus::tinv;
using maxplus::tmul;
using maxplus::tpow;
using maxplus::tr_sum;
using maxplus::vec_add;

void check_shapes(const BoxConstrainedProblem& prob) {
  const std::size_t n = prob.p.size();
  if (prob.q.size() != n || prob.g.size() != n || prob.h.size() != n ||
      prob.B.rows() != n || prob.B.cols() != n) {
    throw ShapeMismatch("problem vectors and matrix must share dimension n");
  }
  if (prob.p.orient() != Orient::column || prob.q.orient() != Orient::column ||
      prob.g.orient() != Orient::column || prob.h.orient() != Orient::column) {
    throw ShapeMismatch("problem vectors must be columns");
  }
}

void require_p_q(const BoxConstrainedProblem& prob) {
  if (prob.p.is_zero()) throw DegenerateInput("p must be nonzero");
  if (!prob.q.is_regular()) throw DegenerateInput("q must be regular");
}

void require_h(const BoxConstrainedProblem& prob) {
  if (!prob.h.is_regular()) throw DegenerateInput("h must be regular");
}

TropScalar finite_theta(const TropScalar& theta) {
  if (theta.is_bottom()) {
    throw std::logic_error("optimum collapsed to bottom despite preconditions");
  }
  return theta;
}

TropSolverResult finish(TropScalar theta, TropMatrix b_star, TropVector u_lower,
                        TropVector u_upper) {
  if (!entrywise_leq(u_lower, u_upper)) {
    throw std::logic_error("parameter box inverted: u_lower > u_upper");
  }
  return TropSolverResult{finite_theta(theta), std::move(b_star),
                          std::move(u_lower), std::move(u_upper)};
}

// Largest term h_i^{-1} (B*)_{ij} g_j of the intersection condition; the
// pair of indices makes the infeasibility report actionable.
void check_intersection(const TropVector& h, const TropMatrix& b_star,
                        const TropVector& g) {
  TropScalar worst;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const TropScalar term = tmul(tinv(h[i]), tmul(b_star(i, j), g[j]));
      if (worst < term) {
        worst = term;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > TropScalar::one()) {
    std::ostringstream label;
    label << "h^-1_" << (wi + 1) << " B*_" << (wi + 1) << (wj + 1) << " g_" << (wj + 1);
    std::ostringstream msg;
    msg << "constraints have empty intersection: term " << label.str() << " = "
        << worst.value() << " exceeds 0";
    throw Infeasible(msg.str(), label.str(), worst.value());
  }
}

}  // namespace

TropVector bottom_vector(std::size_t n) {
  return TropVector::filled(n, TropScalar::bottom());
}

TropVector huge_vector(std::size_t n) {
  return TropVector::filled(n, TropScalar{kHugeBound});
}

BoxConstrainedProblem BoxConstrainedProblem::full(TropVector p, TropVector q,
                                                  TropVector g, TropVector h,
                                                  TropMatrix B) {
  BoxConstrainedProblem prob{std::move(p), std::move(q), std::move(g),
                             std::move(h), std::move(B), ConstraintMode::full};
  check_shapes(prob);
  return prob;
}

BoxConstrainedProblem BoxConstrainedProblem::inequality_only(TropVector p, TropVector q,
                                                             TropMatrix B) {
  const std::size_t n = p.size();
  BoxConstrainedProblem prob{std::move(p),     std::move(q), bottom_vector(n),
                             huge_vector(n),   std::move(B),
                             ConstraintMode::inequality_only};
  check_shapes(prob);
  return prob;
}

BoxConstrainedProblem BoxConstrainedProblem::box_only(TropVector p, TropVector q,
                                                      TropVector g, TropVector h) {
  const std::size_t n = p.size();
  BoxConstrainedProblem prob{std::move(p), std::move(q),  std::move(g), std::move(h),
                             TropMatrix(n, n), ConstraintMode::box_only};
  check_shapes(prob);
  return prob;
}

BoxConstrainedProblem BoxConstrainedProblem::unconstrained(TropVector p, TropVector q) {
  const std::size_t n = p.size();
  BoxConstrainedProblem prob{std::move(p),   std::move(q),     bottom_vector(n),
                             huge_vector(n), TropMatrix(n, n),
                             ConstraintMode::unconstrained};
  check_shapes(prob);
  return prob;
}

BoxConstrainedProblem BoxConstrainedProblem::as_full_encoding() const {
  BoxConstrainedProblem out = *this;
  out.mode = ConstraintMode::full;
  return out;
}

TropScalar objective(const TropVector& x, const TropVector& p, const TropVector& q) {
  if (!x.is_regular()) throw NotRegular("objective requires a regular x");
  if (x.size() != p.size() || x.size() != q.size()) {
    throw ShapeMismatch("objective: nonconforming vectors");
  }
  return tadd(mat_mul(conjugate(x), p), mat_mul(conjugate(q), x));
}

TropSolverResult solve_full(const BoxConstrainedProblem& prob) {
  check_shapes(prob);
  require_p_q(prob);
  require_h(prob);
  if (tr_sum(prob.B) > TropScalar::one()) {
    throw StarDiverges("Bx <= x admits no regular solutions: Tr(B) > 0");
  }
  const TropMatrix b_star = kleene_star(prob.B);
  check_intersection(prob.h, b_star, prob.g);

  const TropVector q_conj_bs = mat_mul(conjugate(prob.q), b_star);
  const TropVector h_conj_bs = mat_mul(conjugate(prob.h), b_star);
  const TropScalar theta =
      tadd(tpow(mat_mul(q_conj_bs, prob.p), 0.5),
           tadd(mat_mul(h_conj_bs, prob.p), mat_mul(q_conj_bs, prob.g)));

  const TropScalar theta_inv = tinv(finite_theta(theta));
  TropVector u_lower = vec_add(prob.g, scale(theta_inv, prob.p));
  TropVector u_upper = conjugate(
      mat_mul(vec_add(conjugate(prob.h), scale(theta_inv, conjugate(prob.q))), b_star));
  return finish(theta, b_star, std::move(u_lower), std::move(u_upper));
}

TropSolverResult solve_inequality_only(const BoxConstrainedProblem& prob) {
  check_shapes(prob);
  require_p_q(prob);
  if (tr_sum(prob.B) > TropScalar::one()) {
    throw StarDiverges("Bx <= x admits no regular solutions: Tr(B) > 0");
  }
  const TropMatrix b_star = kleene_star(prob.B);
  const TropVector q_conj_bs = mat_mul(conjugate(prob.q), b_star);
  const TropScalar theta = tpow(mat_mul(q_conj_bs, prob.p), 0.5);

  TropVector u_lower = scale(tinv(finite_theta(theta)), prob.p);
  TropVector u_upper = scale(theta, conjugate(q_conj_bs));
  return finish(theta, b_star, std::move(u_lower), std::move(u_upper));
}

TropSolverResult solve_box_only(const BoxConstrainedProblem& prob) {
  check_shapes(prob);
  require_p_q(prob);
  require_h(prob);
  for (std::size_t i = 0; i < prob.g.size(); ++i) {
    if (!(prob.g[i] <= prob.h[i])) {
      std::ostringstream label;
      label << "g_" << (i + 1) << "-h_" << (i + 1);
      const double gap = prob.g[i].value() - prob.h[i].value();
      std::ostringstream msg;
      msg << "box is empty: " << label.str() << " = " << gap << " exceeds 0";
      throw Infeasible(msg.str(), label.str(), gap);
    }
  }
  const TropScalar theta =
      tadd(tpow(mat_mul(conjugate(prob.q), prob.p), 0.5),
           tadd(mat_mul(conjugate(prob.h), prob.p),
                mat_mul(conjugate(prob.q), prob.g)));

  const TropScalar theta_inv = tinv(finite_theta(theta));
  TropVector u_lower = vec_add(prob.g, scale(theta_inv, prob.p));
  TropVector u_upper =
      conjugate(vec_add(conjugate(prob.h), scale(theta_inv, conjugate(prob.q))));
  return finish(theta, TropMatrix::identity(prob.dim()), std::move(u_lower),
                std::move(u_upper));
}

TropSolverResult solve_unconstrained(const BoxConstrainedProblem& prob) {
  check_shapes(prob);
  require_p_q(prob);
  const TropScalar theta = tpow(mat_mul(conjugate(prob.q), prob.p), 0.5);
  TropVector u_lower = scale(tinv(finite_theta(theta)), prob.p);
  TropVector u_upper = scale(theta, prob.q);
  return finish(theta, TropMatrix::identity(prob.dim()), std::move(u_lower),
                std::move(u_upper));
}

TropSolverResult solve(const BoxConstrainedProblem& prob) {
  switch (prob.mode) {
    case ConstraintMode::full:
      return solve_full(prob);
    case ConstraintMode::inequality_only:
      return solve_inequality_only(prob);
    case ConstraintMode::box_only:
      return solve_box_only(prob);
    case ConstraintMode::unconstrained:
      return solve_unconstrained(prob);
  }
  throw std::logic_error("unknown constraint mode");
}

std::vector<TropVector> sample_solutions(const TropSolverResult& result,
                                         std::size_t count) {
  std::vector<TropVector> out;
  if (count == 0) return out;
  out.reserve(count);
  const std::size_t n = result.u_lower.size();
  for (std::size_t k = 0; k < count; ++k) {
    const double tau = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    std::vector<TropScalar> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const TropScalar& lo = result.u_lower[i];
      const TropScalar& hi = result.u_upper[i];
      if (lo.is_bottom()) {
        u.push_back(hi);
      } else if (lo == hi) {
        u.push_back(lo);
      } else {
        u.push_back(TropScalar{(1.0 - tau) * lo.value() + tau * hi.value()});
      }
    }
    out.push_back(mat_mul(result.b_star, TropVector(std::move(u))));
  }
  return out;
}

}  // namespace tropt::solver
