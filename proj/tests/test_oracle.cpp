#include "tropt/oracle.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

namespace {

using namespace tropt;
using namespace tropt::location;
using namespace tropt::oracle;

LocationInstance demo_instance(Mode mode) {
  LocationInstance inst;
  inst.points = {{1, 2}, {5, 9}, {7, 5}};
  inst.addends = {2, 1, 1};
  inst.mode = mode;
  if (mode == Mode::full || mode == Mode::distance) {
    inst.distance_bounds = std::vector<double>{7, 5, 5};
  }
  if (mode == Mode::full || mode == Mode::boundary) {
    inst.strip = Strip{4, 8};
  }
  return inst;
}

LocationInstance random_feasible(std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-10, 10);
  std::uniform_int_distribution<int> addend(0, 5);
  std::uniform_int_distribution<int> slack(1, 5);  // keeps a fat feasible ball
  std::uniform_int_distribution<std::size_t> count(1, 5);

  LocationInstance inst;
  const std::size_t m = count(rng);
  for (std::size_t j = 0; j < m; ++j) {
    inst.points.push_back({double(coord(rng)), double(coord(rng))});
    inst.addends.push_back(double(addend(rng)));
  }
  const PlanePoint witness = inst.points[count(rng) % m];
  std::vector<double> bounds;
  double s = inst.points.front().x1, t = s;
  for (std::size_t j = 0; j < m; ++j) {
    bounds.push_back(rect_distance(inst.points[j], witness) + slack(rng));
    s = std::min(s, inst.points[j].x1);
    t = std::max(t, inst.points[j].x1);
  }
  inst.distance_bounds = std::move(bounds);
  inst.strip = Strip{s - slack(rng), t + slack(rng)};
  inst.mode = Mode::full;
  return inst;
}

TEST_CASE("grid spec honors the evaluation cap by widening the step") {
  const auto tiny = GridSpec::make(0, 1, 0, 1, 0.5);
  CHECK_FALSE(tiny.coarsened);
  CHECK(tiny.point_count() == 9);

  const auto capped = GridSpec::make(0, 1000, 0, 1000, 1e-4);
  CHECK(capped.coarsened);
  CHECK(capped.point_count() <= kMaxGridPoints);
  CHECK(capped.step > 1e-4);

  CHECK_THROWS_AS(GridSpec::make(1, 0, 0, 1, 0.1), DegenerateInput);
  CHECK_THROWS_AS(GridSpec::make(0, 1, 0, 1, 0.0), DegenerateInput);
}

TEST_CASE("auto grid covers the region the constraints allow") {
  const auto grid = auto_grid(demo_instance(Mode::full), 0.01);
  CHECK(grid.x1_lo <= 1.0 - 7.0);
  CHECK(grid.x1_hi >= 7.0 + 7.0);
  CHECK(grid.x2_lo <= 2.0 - 7.0);
  CHECK(grid.x2_hi >= 9.0 + 7.0);
  CHECK_FALSE(grid.coarsened);
}

TEST_CASE("grid search brackets the closed-form optimum on the demo instance") {
  const auto inst = demo_instance(Mode::full);
  const auto result = grid_minimize(inst, auto_grid(inst, 0.01));
  CHECK(result.theta_hat >= 8.0);
  CHECK(result.theta_hat <= 8.02);
  CHECK(result.feasible_count >= 100);
  REQUIRE_FALSE(result.minimizers.empty());
  // minimizers are near-optimal and listed lexicographically
  for (std::size_t i = 1; i < result.minimizers.size(); ++i) {
    const auto& a = result.minimizers[i - 1];
    const auto& b = result.minimizers[i];
    CHECK((a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2)));
  }
}

TEST_CASE("grid search on a single free point converges to it") {
  LocationInstance inst;
  inst.points = {{3, 4}};
  inst.addends = {0};
  inst.mode = Mode::unconstrained;
  const auto result = grid_minimize(inst, auto_grid(inst, 0.01));
  CHECK(result.theta_hat <= 0.01 + 1e-12);
}

TEST_CASE("emptied instance reports no feasible grid point") {
  auto inst = demo_instance(Mode::full);
  inst.distance_bounds = std::vector<double>{1, 1, 1};
  CHECK_THROWS_AS(grid_minimize(inst, auto_grid(inst, 0.05)), EmptyFeasible);
  CHECK_FALSE(check_feasibility(derive_scalars(inst), 4, 8, Mode::full));
}

TEST_CASE("too coarse a grid is rejected") {
  const auto inst = demo_instance(Mode::full);
  // only a handful of integer points are feasible
  CHECK_THROWS_AS(grid_minimize(inst, auto_grid(inst, 1.0)), GridTooCoarse);
}

TEST_CASE("verification passes the demo solution and catches injected faults") {
  const auto inst = demo_instance(Mode::full);
  const auto sol = solve(inst);
  const auto grid = auto_grid(inst, 0.01);

  const auto clean = verify_solution(inst, sol, 1e-9, grid);
  CHECK(clean.verdict == Verdict::pass);
  CHECK(clean.theta_closed_form == 8.0);
  CHECK(clean.max_constraint_violation == 0.0);
  CHECK(clean.max_objective_gap_on_solution_set == 0.0);
  CHECK(clean.counterexamples.empty());

  // understated optimum: the solution set no longer attains it
  auto low = sol;
  low.theta -= 0.5;
  const auto low_report = verify_solution(inst, low, 1e-9, grid);
  CHECK(low_report.verdict == Verdict::fail);
  CHECK(low_report.max_objective_gap_on_solution_set == doctest::Approx(0.5));
  CHECK(low_report.counterexamples.empty());

  // overstated optimum: the grid exhibits better points
  auto high = sol;
  high.theta += 0.5;
  const auto high_report = verify_solution(inst, high, 1e-9, grid);
  CHECK(high_report.verdict == Verdict::fail);
  CHECK_FALSE(high_report.counterexamples.empty());

  // vertex pushed through the strip boundary
  auto shifted = sol;
  shifted.polyline.back().x1 = inst.strip->s - 0.1;
  const auto shift_report = verify_solution(inst, shifted, 1e-9, grid);
  CHECK(shift_report.verdict == Verdict::fail);
  CHECK(shift_report.max_constraint_violation == doctest::Approx(0.1));
  REQUIRE_FALSE(shift_report.counterexamples.empty());
  CHECK(shift_report.counterexamples.front().x1 == doctest::Approx(3.9));
}

TEST_CASE("parameter box scan sees a flat objective") {
  const auto inst = demo_instance(Mode::full);
  const auto prob = build_tropical_problem(inst);
  const auto result = solver::solve(prob);
  CHECK(u_box_scan(prob, result, 101) == 0.0);  // exact half-integer arithmetic
  CHECK(u_box_scan(prob, result, 1) == 0.0);

  // fully degenerate box
  const auto p = maxplus::TropVector::column({3, 1});
  const auto pinned =
      solver::solve(solver::BoxConstrainedProblem::unconstrained(p, p));
  CHECK(u_box_scan(solver::BoxConstrainedProblem::unconstrained(p, p), pinned, 7) ==
        0.0);
}

TEST_CASE("parameter box scan stays tiny on random instances") {
  std::mt19937 rng(31);
  for (int run = 0; run < 50; ++run) {
    const auto inst = random_feasible(rng);
    const auto prob = build_tropical_problem(inst);
    const auto result = solver::solve(prob);
    CHECK(u_box_scan(prob, result, 33) <= 1e-9);
  }
}

TEST_CASE("term-by-term star agrees with the operator") {
  using maxplus::TropMatrix;
  using maxplus::TropScalar;
  const TropScalar bot = TropScalar::bottom();
  const TropMatrix b{{bot, TropScalar{8}}, {TropScalar{-16}, bot}};
  CHECK(definitional_star(b) == maxplus::kleene_star(b));
  CHECK(definitional_star(TropMatrix::identity(3)) == TropMatrix::identity(3));

  std::mt19937 rng(37);
  std::uniform_int_distribution<int> lattice(-20, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int run = 0; run < 50; ++run) {
    const std::size_t n = 1 + run % 6;
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (unit(rng) < 0.35) continue;
        m(i, j) = TropScalar{lattice(rng) * 0.25};
      }
    }
    if (maxplus::tr_sum(m) > TropScalar::one()) continue;
    CHECK(definitional_star(m) == maxplus::kleene_star(m));
  }
}

TEST_CASE("grid optimum is sandwiched around the closed form") {
  std::mt19937 rng(41);
  for (int run = 0; run < 25; ++run) {
    const auto inst = random_feasible(rng);
    const auto sol = solve(inst);
    const double step = 0.05;
    const auto result = grid_minimize(inst, auto_grid(inst, step));
    CHECK(result.theta_hat >= sol.theta - 1e-9);
    CHECK(result.theta_hat <= sol.theta + 2.0 * step + 1e-9);
  }
}

TEST_CASE("empty grid result matches the closed-form feasibility check") {
  std::mt19937 rng(43);
  int infeasible_seen = 0;
  for (int run = 0; run < 40; ++run) {
    auto inst = random_feasible(rng);

    // feasible: the witness ball has radius >= 1, so the grid must see it
    CHECK_NOTHROW(grid_minimize(inst, auto_grid(inst, 0.1)));
    CHECK(check_feasibility(derive_scalars(inst), inst.strip->s, inst.strip->t,
                            Mode::full));

    // zero bounds empty the region whenever two points differ
    bool distinct = false;
    for (const auto& r : inst.points) {
      if (!(r == inst.points.front())) distinct = true;
    }
    if (!distinct) continue;
    ++infeasible_seen;
    inst.distance_bounds = std::vector<double>(inst.points.size(), 0.0);
    CHECK_FALSE(check_feasibility(derive_scalars(inst), inst.strip->s,
                                  inst.strip->t, Mode::full));
    CHECK_THROWS_AS(grid_minimize(inst, auto_grid(inst, 0.1)), EmptyFeasible);
  }
  CHECK(infeasible_seen > 10);
}

}  // namespace
