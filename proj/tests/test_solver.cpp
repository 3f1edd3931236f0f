#include "tropt/solver.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "tropt/location.hpp"

namespace {

using namespace tropt;
using namespace tropt::maxplus;
using namespace tropt::solver;

const TropScalar kBot = TropScalar::bottom();

// Reference instance used throughout: three demand points transformed to
// rotated coordinates, strip 4..8, hand-checked constants.
BoxConstrainedProblem demo_problem() {
  return BoxConstrainedProblem::full(
      TropVector::column({15, 5}), TropVector::column({1, -3}),
      TropVector::column({9, -1}), TropVector::column({10, 3}),
      TropMatrix{{kBot, TropScalar{8}}, {TropScalar{-16}, kBot}});
}

double real(const TropScalar& s) { return s.value(); }

struct Gen {
  std::mt19937 rng;
  std::uniform_int_distribution<int> lattice{-40, 40};
  std::uniform_int_distribution<int> gap{0, 24};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  explicit Gen(unsigned seed) : rng(seed) {}

  double quarter() { return lattice(rng) * 0.25; }

  TropVector regular(std::size_t n) {
    std::vector<TropScalar> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(quarter());
    return TropVector(e);
  }

  TropMatrix star_safe(std::size_t n, double shift) {
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (unit(rng) < 0.4) continue;  // keep bottom
        m(i, j) = TropScalar{-std::abs(quarter()) - shift};
      }
    }
    return m;
  }

  // Random feasible full-mode problem; rejection widens the box and
  // pushes B down until the intersection condition holds.
  BoxConstrainedProblem feasible_full(std::size_t n) {
    for (int attempt = 0;; ++attempt) {
      const double widen = 0.25 * attempt;
      TropVector h = regular(n);
      std::vector<TropScalar> g_elems;
      for (std::size_t i = 0; i < n; ++i) {
        g_elems.emplace_back(h[i].value() - gap(rng) * 0.25 - widen);
      }
      BoxConstrainedProblem prob = BoxConstrainedProblem::full(
          regular(n), regular(n), TropVector(g_elems), h,
          star_safe(n, 0.25 + widen));
      try {
        solve_full(prob);
        return prob;
      } catch (const Infeasible&) {
        continue;
      }
    }
  }
};

TEST_CASE("objective evaluates x^-p (+) q^-x") {
  const auto p = TropVector::column({15, 5});
  const auto q = TropVector::column({1, -3});
  CHECK(objective(TropVector::column({9, -1}), p, q) == TropScalar{8});
  CHECK(objective(p, p, p) == TropScalar::one());

  // with p all bottom only the q-side term remains
  const auto x = TropVector::column({2, 7});
  CHECK(objective(x, TropVector::filled(2, kBot), q) ==
        mat_mul(conjugate(q), x));

  CHECK_THROWS_AS(objective(TropVector::column({kBot, TropScalar{1}}), p, q),
                  NotRegular);
}

TEST_CASE("full solve on the reference problem") {
  const auto result = solve_full(demo_problem());
  CHECK(result.theta == TropScalar{8});
  CHECK(result.b_star == TropMatrix{{TropScalar{0}, TropScalar{8}},
                                    {TropScalar{-16}, TropScalar{0}}});
  CHECK(result.u_lower == TropVector::column({9, -1}));
  CHECK(result.u_upper == TropVector::column({9, 1}));
}

TEST_CASE("full solve reports the violated intersection term") {
  auto prob = demo_problem();
  prob.g = TropVector::column({20, 20});
  CHECK_THROWS_AS(solve_full(prob), Infeasible);
  try {
    solve_full(prob);
  } catch (const Infeasible& e) {
    CHECK(e.term_value == 18.0);  // h1^-1 + (B*)_12 + g2 = -10 + 8 + 20
    CHECK(e.term_label == "h^-1_1 B*_12 g_2");
  }
}

TEST_CASE("full solve validates inputs") {
  auto prob = demo_problem();
  prob.p = TropVector::filled(2, kBot);
  CHECK_THROWS_AS(solve_full(prob), DegenerateInput);

  prob = demo_problem();
  prob.q = TropVector::column({kBot, TropScalar{1}});
  CHECK_THROWS_AS(solve_full(prob), DegenerateInput);

  prob = demo_problem();
  prob.h = TropVector::column({kBot, TropScalar{1}});
  CHECK_THROWS_AS(solve_full(prob), DegenerateInput);

  prob = demo_problem();
  prob.B(0, 0) = TropScalar{1};
  CHECK_THROWS_AS(solve_full(prob), StarDiverges);
}

TEST_CASE("full solve degenerates to the unconstrained optimum") {
  const auto p = TropVector::column({3, -1, 2});
  const auto prob = BoxConstrainedProblem::full(p, p, bottom_vector(3),
                                                huge_vector(3), TropMatrix(3, 3));
  const auto result = solve_full(prob);
  CHECK(result.theta == TropScalar::one());
  CHECK(sample_solutions(result, 1).front() == p);
}

TEST_CASE("inequality-only solve") {
  const auto prob = BoxConstrainedProblem::inequality_only(
      TropVector::column({15, 5}), TropVector::column({1, -3}),
      TropMatrix{{kBot, TropScalar{8}}, {TropScalar{-16}, kBot}});
  const auto result = solve_inequality_only(prob);
  CHECK(result.theta == TropScalar{7});  // (q^- B* p)^(1/2) with q^- B* p = 14
  CHECK(result.u_lower == TropVector::column({8, -2}));
  CHECK(result.u_upper == TropVector::column({8, 0}));
  CHECK(objective(mat_mul(result.b_star, result.u_lower), prob.p, prob.q) ==
        result.theta);

  const auto p = TropVector::column({2, 2});
  const auto trivial = solve_inequality_only(
      BoxConstrainedProblem::inequality_only(p, p, TropMatrix(2, 2)));
  CHECK(trivial.theta == TropScalar::one());
  CHECK(trivial.u_lower == p);
  CHECK(trivial.u_upper == p);
}

TEST_CASE("box-only solve") {
  const auto prob = BoxConstrainedProblem::box_only(
      TropVector::column({15, 5}), TropVector::column({1, -3}),
      TropVector::column({9, -1}), TropVector::column({10, 3}));
  const auto result = solve_box_only(prob);
  CHECK(result.theta == TropScalar{8});  // max(7, 4, 5, 2, 8, 2)
  CHECK(result.b_star == TropMatrix::identity(2));
  // lower bound is g (+) theta^-1 p by construction
  CHECK(result.u_lower == vec_add(prob.g, scale(tinv(result.theta), prob.p)));
  CHECK(result.u_lower == TropVector::column({9, -1}));
  CHECK(result.u_upper == TropVector::column({9, 3}));

  const auto p = TropVector::column({4, 4});
  const auto pinned = solve_box_only(BoxConstrainedProblem::box_only(p, p, p, p));
  CHECK(pinned.theta == TropScalar::one());
  CHECK(pinned.u_lower == p);
  CHECK(pinned.u_upper == p);

  auto bad = prob;
  bad.g = TropVector::column({11, -1});  // g1 > h1
  CHECK_THROWS_AS(solve_box_only(bad), Infeasible);
}

TEST_CASE("unconstrained solve") {
  const auto prob = BoxConstrainedProblem::unconstrained(TropVector::column({15, 5}),
                                                         TropVector::column({1, -3}));
  const auto result = solve_unconstrained(prob);
  CHECK(result.theta == TropScalar{7});  // max(15-1, 5+3)/2
  CHECK(result.u_lower == TropVector::column({8, -2}));
  CHECK(result.u_upper == TropVector::column({8, 4}));

  const auto p = TropVector::column({-2, 6});
  const auto pinned = solve_unconstrained(BoxConstrainedProblem::unconstrained(p, p));
  CHECK(pinned.theta == TropScalar::one());
  CHECK(pinned.u_lower == p);
  CHECK(pinned.u_upper == p);
}

TEST_CASE("sampled solutions stay in the solution set") {
  const auto prob = demo_problem();
  const auto result = solve_full(prob);

  const auto single = sample_solutions(result, 1);
  REQUIRE(single.size() == 1);
  CHECK(single.front() == mat_mul(result.b_star, result.u_lower));

  const auto pair = sample_solutions(result, 2);
  REQUIRE(pair.size() == 2);
  const auto e0 =
      location::from_chebyshev({pair[0][0].value(), pair[0][1].value()});
  const auto e1 =
      location::from_chebyshev({pair[1][0].value(), pair[1][1].value()});
  CHECK(e0 == location::PlanePoint{5, 4});
  CHECK(e1 == location::PlanePoint{4, 5});

  for (const auto& x : sample_solutions(result, 9)) {
    CHECK(objective(x, prob.p, prob.q) == result.theta);
  }
}

TEST_CASE("random feasible problems: attainment and constraint satisfaction") {
  Gen gen(101);
  for (int run = 0; run < 150; ++run) {
    const std::size_t n = 2 + run % 3;
    const auto prob = gen.feasible_full(n);
    const auto result = solve_full(prob);
    for (const auto& x : sample_solutions(result, 5)) {
      CHECK(objective(x, prob.p, prob.q) == result.theta);
      CHECK(entrywise_leq(mat_mul(prob.B, x), x));
      CHECK(entrywise_leq(prob.g, x));
      CHECK(entrywise_leq(x, prob.h));
    }
    CHECK(entrywise_leq(result.u_lower, result.u_upper));
  }
}

TEST_CASE("random feasible problems: no grid point beats theta") {
  Gen gen(131);
  for (int run = 0; run < 60; ++run) {
    const std::size_t n = 2 + run % 3;  // 2, 3, 4
    const auto prob = gen.feasible_full(n);
    const double theta = real(solve_full(prob).theta);

    const int samples = n == 2 ? 17 : (n == 3 ? 11 : 7);
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<TropScalar> x_elems;
      for (std::size_t i = 0; i < n; ++i) {
        const double lo = prob.g[i].value();
        const double hi = prob.h[i].value();
        const double tau = samples == 1 ? 0.0 : double(idx[i]) / (samples - 1);
        x_elems.emplace_back((1.0 - tau) * lo + tau * hi);
      }
      const TropVector x(x_elems);
      if (entrywise_leq(mat_mul(prob.B, x), x)) {
        CHECK(real(objective(x, prob.p, prob.q)) >= theta - 1e-9);
      }
      std::size_t d = 0;
      while (d < n && ++idx[d] == samples) {
        idx[d] = 0;
        ++d;
      }
      if (d == n) break;
    }
  }
}

TEST_CASE("reduced closed forms match the sentinel-encoded full machinery") {
  Gen gen(137);
  for (int run = 0; run < 120; ++run) {
    const std::size_t n = 2 + run % 3;
    const auto base = gen.feasible_full(n);

    const auto ineq = BoxConstrainedProblem::inequality_only(base.p, base.q, base.B);
    const auto ineq_direct = solve_inequality_only(ineq);
    const auto ineq_general = solve_full(ineq.as_full_encoding());
    CHECK(ineq_direct.theta == ineq_general.theta);
    CHECK(ineq_direct.u_lower == ineq_general.u_lower);
    CHECK(ineq_direct.u_upper == ineq_general.u_upper);

    const auto box = BoxConstrainedProblem::box_only(base.p, base.q, base.g, base.h);
    const auto box_direct = solve_box_only(box);
    const auto box_general = solve_full(box.as_full_encoding());
    CHECK(box_direct.theta == box_general.theta);
    CHECK(box_direct.u_lower == box_general.u_lower);
    CHECK(box_direct.u_upper == box_general.u_upper);

    const auto unc = BoxConstrainedProblem::unconstrained(base.p, base.q);
    const auto unc_direct = solve_unconstrained(unc);
    const auto unc_general = solve_full(unc.as_full_encoding());
    CHECK(unc_direct.theta == unc_general.theta);
    CHECK(unc_direct.u_lower == unc_general.u_lower);
    CHECK(unc_direct.u_upper == unc_general.u_upper);
  }
}

TEST_CASE("theta grows as constraints are added") {
  Gen gen(149);
  for (int run = 0; run < 120; ++run) {
    const std::size_t n = 2 + run % 3;
    const auto full = gen.feasible_full(n);
    const double t_full = real(solve_full(full).theta);
    const double t_ineq = real(solve_inequality_only(
                                   BoxConstrainedProblem::inequality_only(
                                       full.p, full.q, full.B))
                                   .theta);
    const double t_box =
        real(solve_box_only(
                 BoxConstrainedProblem::box_only(full.p, full.q, full.g, full.h))
                 .theta);
    const double t_unc =
        real(solve_unconstrained(BoxConstrainedProblem::unconstrained(full.p, full.q))
                 .theta);
    CHECK(t_unc <= t_ineq);
    CHECK(t_unc <= t_box);
    CHECK(t_ineq <= t_full);
    CHECK(t_box <= t_full);
  }
}

TEST_CASE("mode dispatch routes to the matching closed form") {
  const auto prob = demo_problem();
  CHECK(solve(prob).theta == solve_full(prob).theta);
  const auto unc = BoxConstrainedProblem::unconstrained(prob.p, prob.q);
  CHECK(solve(unc).theta == TropScalar{7});
}

}  // namespace
