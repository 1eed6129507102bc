/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "helpers.hpp"
#include "rng.hpp"
#include "weighted.hpp"

using namespace asrel;
using namespace asrel::test;

namespace {

// Two variables over conflicting and plain clauses, explicit degrees.
ClauseSet two_var_conflicts() {
  ClauseSet cs;
  cs.num_vars = 2;
  cs.clauses = {mk_clause(-1, -2), mk_clause(-1, 2), mk_clause(1, -2),
                mk_clause(1, 2)};
  return cs;
}

std::vector<DegreePair> two_var_degrees() {
  // var 1 joins degree 5 and 10 nodes, var 2 degree 9 and 10
  return {DegreePair{}, DegreePair{5, 10}, DegreePair{9, 10}};
}

}  // namespace

TEST_CASE("degree gradient magnitude") {
  CHECK(gradient_f(3, 3) == 0.0);
  // frozen oracle value of (5/15)*ln(15)
  CHECK(gradient_f(5, 10) == doctest::Approx(0.9026834003674034).epsilon(1e-12));
  // same relative gradient at larger absolute degrees weighs more
  CHECK(gradient_f(500, 1000) > gradient_f(5, 10));
  CHECK(gradient_f(5, 10) > gradient_f(995, 1000));
  CHECK_THROWS_AS(gradient_f(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(gradient_f(5, 3), std::invalid_argument);
}

TEST_CASE("weight split across clause kinds") {
  const ClauseSet cs = two_var_conflicts();
  const auto degrees = two_var_degrees();

  SUBCASE("each 2-link clause carries alpha over their count") {
    const WeightedInstance w = build_weighted(cs, degrees, 0.5);
    CHECK(w.num_binary() == 4);
    CHECK(w.num_unary() == 2);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(w.clauses[i].w == doctest::Approx(0.125).epsilon(1e-12));
  }
  SUBCASE("1-link weights are proportional to the gradient values") {
    const WeightedInstance w = build_weighted(cs, degrees, 0.5);
    const double f1 = gradient_f(5, 10);
    const double f2 = gradient_f(9, 10);
    double u1 = 0.0, u2 = 0.0;
    for (const WClause& c : w.clauses) {
      if (c.a != c.b) continue;
      if (c.a == 1) u1 = c.w;
      if (c.a == 2) u2 = c.w;
    }
    CHECK(u1 / u2 == doctest::Approx(f1 / f2).epsilon(1e-12));
    CHECK(u1 + u2 == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("alpha grid keeps both sums normalized") {
    for (int g = 0; g <= 10; ++g) {
      const double alpha = g / 10.0;
      const WeightedInstance w = build_weighted(cs, degrees, alpha);
      double sum2 = 0.0, sum1 = 0.0;
      for (const WClause& c : w.clauses) (c.a == c.b ? sum1 : sum2) += c.w;
      CHECK(sum2 == doctest::Approx(alpha).epsilon(1e-9));
      CHECK(sum1 == doctest::Approx(1.0 - alpha).epsilon(1e-9));
      CHECK(w.total_weight() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("alpha one zeroes every 1-link weight") {
    const WeightedInstance w = build_weighted(cs, degrees, 1.0);
    for (const WClause& c : w.clauses)
      if (c.a == c.b) CHECK(c.w == 0.0);
  }
  SUBCASE("alpha outside the unit interval is rejected") {
    CHECK_THROWS_AS(build_weighted(cs, degrees, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(build_weighted(cs, degrees, 1.1), std::invalid_argument);
  }
}

TEST_CASE("degenerate weighted instances") {
  SUBCASE("no 2-link clause") {
    ClauseSet cs;
    cs.num_vars = 1;
    const WeightedInstance w =
        build_weighted(cs, {DegreePair{}, DegreePair{2, 6}}, 0.7);
    CHECK(w.missing_binary);
    CHECK(w.num_binary() == 0);
    CHECK(w.num_unary() == 1);
  }
  SUBCASE("all gradients zero skips the 1-link clauses") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(-1, -2)};
    const WeightedInstance w = build_weighted(
        cs, {DegreePair{}, DegreePair{4, 4}, DegreePair{7, 7}}, 0.5);
    CHECK(w.skipped_unary);
    CHECK(w.num_unary() == 0);
  }
}

TEST_CASE("objective value counts satisfied weight") {
  WeightedInstance inst;
  inst.num_vars = 2;
  inst.clauses = {{1, 1, 1.0}, {-1, -2, 0.5}};
  SUBCASE("single positive unary satisfied by true") {
    CHECK(objective_value(inst, {0, 1, 0}) == doctest::Approx(1.5));
    CHECK(objective_value(inst, {0, 1, 1}) == doctest::Approx(1.0));
    CHECK(objective_value(inst, {0, 0, 1}) == doctest::Approx(0.5));
  }
  SUBCASE("wrong assignment size is rejected") {
    CHECK_THROWS_AS(objective_value(inst, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(objective_value(inst, {0, 1, 0, 0}),
                    std::invalid_argument);
  }
  SUBCASE("matches brute enumeration on random instances") {
    SplitMix64 rng(derive_seed(23, "objective", 0));
    for (int round = 0; round < 30; ++round) {
      const int n = 1 + static_cast<int>(rng.next_below(8));
      const WeightedInstance w = random_weighted(rng, n, 12);
      std::vector<char> values(static_cast<std::size_t>(n) + 1, 0);
      for (int v = 1; v <= n; ++v)
        values[static_cast<std::size_t>(v)] =
            static_cast<char>(rng.next_below(2));
      double manual = 0.0;
      for (const WClause& c : w.clauses)
        if (lit_true(c.a, values) || lit_true(c.b, values)) manual += c.w;
      CHECK(objective_value(w, values) == doctest::Approx(manual).epsilon(1e-12));
    }
  }
}

TEST_CASE("exhaustive optimum") {
  SUBCASE("single binary clause ties break lexicographically") {
    WeightedInstance inst;
    inst.num_vars = 2;
    inst.clauses = {{1, 2, 1.0}};
    const Assignment a = brute_force_opt(inst);
    CHECK(a.objective == doctest::Approx(1.0));
    CHECK(a.values[1] == 0);
    CHECK(a.values[2] == 1);
  }
  SUBCASE("empty clause set is all-false at objective zero") {
    WeightedInstance inst;
    inst.num_vars = 3;
    const Assignment a = brute_force_opt(inst);
    CHECK(a.objective == 0.0);
    for (int v = 1; v <= 3; ++v) CHECK(a.values[v] == 0);
  }
  SUBCASE("too many variables are refused") {
    WeightedInstance inst;
    inst.num_vars = 21;
    CHECK_THROWS_AS(brute_force_opt(inst), std::invalid_argument);
  }
  SUBCASE("never beaten by sampling") {
    SplitMix64 rng(derive_seed(29, "brute", 0));
    for (int round = 0; round < 20; ++round) {
      const int n = 2 + static_cast<int>(rng.next_below(7));
      const WeightedInstance w = random_weighted(rng, n, 10);
      const Assignment best = brute_force_opt(w);
      for (int s = 0; s < 50; ++s) {
        std::vector<char> values(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v)
          values[static_cast<std::size_t>(v)] =
              static_cast<char>(rng.next_below(2));
        CHECK(objective_value(w, values) <= best.objective + 1e-12);
      }
    }
  }
}

TEST_CASE("weighted DIMACS round trip") {
  const WeightedInstance w =
      build_weighted(two_var_conflicts(), two_var_degrees(), 0.3);
  const WeightedInstance back = parse_wdimacs(to_wdimacs(w));
  REQUIRE(back.num_vars == w.num_vars);
  REQUIRE(back.clauses.size() == w.clauses.size());
  for (std::size_t i = 0; i < w.clauses.size(); ++i) {
    CHECK(back.clauses[i].a == w.clauses[i].a);
    CHECK(back.clauses[i].b == w.clauses[i].b);
    CHECK(back.clauses[i].w == w.clauses[i].w);  // %.17g survives exactly
  }
  CHECK_THROWS_AS(parse_wdimacs("p wcnf x y"), ParseError);
  CHECK_THROWS_AS(parse_wdimacs("1 2 3"), ParseError);
}
