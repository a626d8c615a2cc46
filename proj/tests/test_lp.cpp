#include <catch2/catch_amalgamated.hpp>

#include <chanorder/chanorder.hpp>

#include "oracles.hpp"

using namespace chanorder;

namespace {

LPProblem make_problem(const RMatrix& a, std::vector<Rational> b, std::vector<Rational> c) {
  return LPProblem{a, std::move(b), std::move(c)};
}

}  // namespace

TEST_CASE("one-variable optimum") {
  const LPProblem p = make_problem(rmx({{"1", "1"}}), {Rational(1)}, {Rational(1), Rational(0)});
  const LPOutcome out = solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.solution[0] == 1);
  CHECK(out.objective_value == 1);
  CHECK(outcome_consistent(p, out));
}

TEST_CASE("contradictory equalities yield the pinned Farkas vector") {
  const LPProblem p =
      make_problem(rmx({{"1"}, {"1"}}), {Rational(1), Rational(0)}, {Rational(0)});
  const LPOutcome out = solve(p);
  REQUIRE(out.status == LPStatus::Infeasible);
  REQUIRE(out.farkas.size() == 2);
  CHECK(out.farkas[0] == 1);
  CHECK(out.farkas[1] == -1);
  CHECK(outcome_consistent(p, out));
}

TEST_CASE("feasibility wrapper") {
  const LPOutcome ok = feasible(rmx({{"1", "1"}}), {Rational(1)});
  REQUIRE(ok.status == LPStatus::Optimal);
  CHECK(ok.solution[0] + ok.solution[1] == 1);

  const LPOutcome bad = feasible(rmx({{"1", "1"}}), {Rational(-1)});
  REQUIRE(bad.status == LPStatus::Infeasible);
  CHECK(outcome_consistent(LPProblem{rmx({{"1", "1"}}), {Rational(-1)},
                                     {Rational(0), Rational(0)}},
                           bad));
}

TEST_CASE("unbounded ray is reported") {
  const LPProblem p = make_problem(rmx({{"1", "-1"}}), {Rational(0)}, {Rational(1), Rational(0)});
  CHECK(solve(p).status == LPStatus::Unbounded);
}

TEST_CASE("redundant constraints are tolerated") {
  const LPProblem p = make_problem(rmx({{"1", "1"}, {"2", "2"}}), {Rational(1), Rational(2)},
                                   {Rational(1), Rational(0)});
  const LPOutcome out = solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.objective_value == 1);
  CHECK(outcome_consistent(p, out));
}

TEST_CASE("solver output is identical across repeated runs") {
  SplitMix64 gen(21);
  for (int t = 0; t < 10; ++t) {
    RMatrix a(2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = random_signed_rational(gen, 2, 3);
    }
    std::vector<Rational> b{random_signed_rational(gen, 2, 3), random_signed_rational(gen, 2, 3)};
    std::vector<Rational> c(4);
    for (auto& coef : c) coef = random_signed_rational(gen, 2, 3);
    const LPProblem p = make_problem(a, b, c);
    const LPOutcome first = solve(p);
    const LPOutcome second = solve(p);
    CHECK(first.status == second.status);
    CHECK(first.solution == second.solution);
    CHECK(first.objective_value == second.objective_value);
    CHECK(first.farkas == second.farkas);
    CHECK(outcome_consistent(p, first));
  }
}

TEST_CASE("optimum agrees with exhaustive vertex enumeration") {
  SplitMix64 gen(22);
  for (int t = 0; t < 50; ++t) {
    // A x <= b (b >= 0) plus a bounding box, in standard form with slacks:
    // feasible (x = 0), bounded, full row rank.
    const std::size_t vars = 2 + gen.below(2);
    const std::size_t ineqs = 1 + gen.below(3);
    const std::size_t rows = ineqs + 1;
    const std::size_t cols = vars + ineqs + 1;
    RMatrix a(rows, cols);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < ineqs; ++i) {
      for (std::size_t j = 0; j < vars; ++j) a(i, j) = Rational(gen.below(5));
      a(i, vars + i) = 1;
      b[i] = Rational(gen.below(7));
    }
    for (std::size_t j = 0; j < vars; ++j) a(ineqs, j) = 1;
    a(ineqs, vars + ineqs) = 1;
    b[ineqs] = Rational(3 + gen.below(5));
    std::vector<Rational> c(cols);
    for (std::size_t j = 0; j < vars; ++j) c[j] = random_signed_rational(gen, 3, 2);

    const LPProblem p = make_problem(a, b, c);
    const LPOutcome out = solve(p);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(outcome_consistent(p, out));
    const auto brute = oracle::vertex_max(p);
    REQUIRE(brute.has_value());
    CHECK(out.objective_value == *brute);
  }
}

TEST_CASE("every random outcome carries an exact certificate") {
  SplitMix64 gen(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + gen.below(3);
    const std::size_t cols = 1 + gen.below(4);
    RMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_signed_rational(gen, 2, 2);
    }
    std::vector<Rational> b(rows);
    for (auto& cell : b) cell = random_signed_rational(gen, 2, 2);
    const LPProblem p = make_problem(a, b, std::vector<Rational>(cols, Rational(0)));
    const LPOutcome out = solve(p);
    CHECK(out.status != LPStatus::Unbounded);
    CHECK(outcome_consistent(p, out));
  }
}

TEST_CASE("standard form builder") {
  StandardFormBuilder lp;
  const std::size_t x = lp.add_variable();
  const std::size_t y = lp.add_variable();
  lp.add_le({{x, Rational(1)}, {y, Rational(1)}}, Rational(4));
  lp.add_ge({{x, Rational(1)}}, Rational(1));
  lp.add_eq({{y, Rational(2)}}, Rational(3));
  lp.set_objective(x, Rational(1));
  const LPProblem p = lp.build();
  CHECK(p.constraints.rows() == 3);
  CHECK(p.constraints.cols() == 4);  // two variables, one slack, one surplus
  const LPOutcome out = solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.solution[x] == parse_rational("5/2"));
  CHECK(out.solution[y] == parse_rational("3/2"));

  StandardFormBuilder bad;
  CHECK_THROWS_AS(bad.add_eq({{5, Rational(1)}}, Rational(0)), std::invalid_argument);
}
