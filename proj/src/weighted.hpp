/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tor2sat.hpp"

namespace asrel {

// Weighted clause over DIMACS-style literals; a == b is a 1-link clause.
struct WClause {
  int a = 0;
  int b = 0;
  double w = 0.0;
};

// Endpoint degrees of a link, smaller first.
struct DegreePair {
  std::uint32_t d_minus = 0;
  std::uint32_t d_plus = 0;
};

struct WeightedInstance {
  int num_vars = 0;
  std::vector<WClause> clauses;
  double alpha = 0.0;
  double c1 = 0.0;  // 1 / sum of degree-gradient values, 0 when skipped
  double c2 = 0.0;  // 1 / number of 2-link clauses, 0 when none
  bool skipped_unary = false;   // all gradient values were zero
  bool missing_binary = false;  // no 2-link clause existed

  std::size_t num_binary() const;
  std::size_t num_unary() const;
  double total_weight() const;
};

// Degree-gradient magnitude of a link with endpoint degrees d_minus <=
// d_plus: the normalized degree difference scaled by the natural logarithm
// of the degree sum. Zero for equal degrees, growing with both the
// imbalance and the size of the ASs involved. Throws std::invalid_argument
// on non-positive or misordered degrees.
double gradient_f(std::uint32_t d_minus, std::uint32_t d_plus);

// Weighted instance over the conflict clauses. The 2-link clauses share
// weight alpha uniformly; every variable gains a 1-link clause asserting
// its initial direction, with the remaining 1 - alpha distributed
// proportionally to gradient_f of its link. degrees[v] holds the endpoint
// degrees of variable v's link (index 0 unused). When every gradient value
// is zero the 1-link clauses are skipped and skipped_unary is set; when
// there is no 2-link clause missing_binary is set and only 1-link weight is
// assigned.
WeightedInstance build_weighted(const ClauseSet& conflicts,
                                const std::vector<DegreePair>& degrees,
                                double alpha);

struct Assignment {
  std::vector<char> values;  // 1-based
  double objective = 0.0;
};

// Total weight of the clauses the assignment satisfies. values must cover
// every variable (size num_vars + 1).
double objective_value(const WeightedInstance& inst,
                       const std::vector<char>& values);

// Exhaustive optimum; refuses instances with more than 20 variables. Ties
// resolve to the lexicographically smallest assignment read as the value
// vector of variables 1..n.
Assignment brute_force_opt(const WeightedInstance& inst);

// Weighted DIMACS text: "p wcnf <vars> <clauses>" and one
// "<weight> <lit> [<lit>] 0" line per clause.
std::string to_wdimacs(const WeightedInstance& inst);

// Inverse of to_wdimacs for 1- and 2-literal clauses. Degrees and split
// coefficients are not representable in the format and come back empty.
WeightedInstance parse_wdimacs(const std::string& text);

}  // namespace asrel
