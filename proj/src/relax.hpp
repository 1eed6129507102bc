/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "weighted.hpp"

namespace asrel {

struct RelaxConfig {
  int dim = 0;              // 0 = automatic from the variable count
  int restarts = 3;         // random starts beyond the aligned start
  int max_iters = 5000;     // ascent sweeps per start
  double tolerance = 1e-7;  // projected-gradient norm target
  std::uint64_t seed = 0;
};

// Unit vectors on the sphere: v0 is the truth direction, v[i] belongs to
// variable i+1. A variable is decoded true when its vector falls on v0's
// side of a cut.
struct VectorSolution {
  int dim = 0;
  Eigen::VectorXd v0;
  std::vector<Eigen::VectorXd> v;
  double objective = 0.0;   // relaxation value at the returned vectors
  int iterations = 0;       // ascent sweeps summed over all starts
  double grad_norm = 0.0;   // projected-gradient norm of the returned vectors
  bool converged = false;
  int best_start = 0;       // 0 = aligned start, k = k-th random start
};

// Maximizes the semidefinite relaxation of the weighted instance over unit
// vectors by block-coordinate ascent on a low-rank factorization. Start 0
// places every vector on v0, which is a stationary point exactly when the
// all-true assignment is locally unimprovable; random restarts and small
// perturbation escapes guard against saddle points. The returned solution
// is the best objective across starts.
VectorSolution solve_relaxation(const WeightedInstance& inst,
                                const RelaxConfig& cfg);

// Relaxation value of an arbitrary vector configuration: for every clause
// w/4 * (3 + s_a v0.va + s_b v0.vb - s_a s_b va.vb) with literal signs s,
// and w/2 * (1 + s v0.va) for 1-link clauses. At vectors of the form
// v = +-v0 this equals the satisfied weight of the decoded assignment.
double relaxation_objective(const WeightedInstance& inst,
                            const Eigen::VectorXd& v0,
                            const std::vector<Eigen::VectorXd>& v);

struct RoundingConfig {
  int n_cuts = 200;
  std::uint64_t seed = 0;
  double rotation = 0.0;    // [0,1] pull toward +-v0 before cutting
  double ortho_bias = 0.0;  // [0,1] shrink of the cut normal along v0
  int jobs = 1;
};

// Decodes the vector solution with random hyperplane cuts and returns the
// best assignment found. Cut j draws its normal from a generator seeded by
// (seed, "cut", j), so results do not depend on the jobs count; ties in the
// objective resolve to the lowest cut index.
Assignment round_hyperplane(const VectorSolution& sol,
                            const WeightedInstance& inst,
                            const RoundingConfig& cfg);

}  // namespace asrel
