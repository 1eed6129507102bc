/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "relmap.hpp"
#include "siblings.hpp"
#include "tor2sat.hpp"
#include "weighted.hpp"

namespace asrel {

struct RunConfig {
  double alpha = 0.5;
  std::uint64_t seed = 1;
  int n_cuts = 200;
  double rotation = 0.0;
  double ortho_bias = 0.0;
  int restarts = 3;
  int dim = 0;  // 0 = automatic
  int max_iters = 5000;
  double tolerance = 1e-7;
  int jobs = 1;
};

// Deterministic account of one inference; carries no wall-clock values so
// equal inputs produce byte-identical reports.
struct RunReport {
  RunConfig config;
  std::size_t paths = 0;
  std::size_t ases = 0;
  std::size_t links = 0;
  std::size_t pairs = 0;
  std::size_t siblings = 0;
  int variables = 0;           // links carrying a boolean variable
  int conflict_clauses = 0;    // clauses before stripping
  int fixed_by_stripping = 0;
  int gradient_default = 0;    // variables in no clause at all
  int residual_vars = 0;
  int residual_clauses = 0;
  std::size_t residual_fragments = 0;  // path pieces over residual links
  bool solver_ran = false;
  double relax_objective = 0.0;
  double rounded_objective = 0.0;
  int solver_iterations = 0;
  double solver_grad_norm = 0.0;
  int solver_best_start = 0;
  bool unary_weights_skipped = false;
  ValidityReport validity;
};

struct InferResult {
  RelationshipMap relmap;
  RunReport report;
};

// Full inference: sibling detection, gradient orientation, conflict
// clauses, non-conflict stripping, weighted relaxation of the residual and
// hyperplane rounding. Every link of the path graph receives exactly one
// record. orgs may be null. All stochastic draws derive from
// (cfg.seed, alpha), so a sweep row and a standalone run at the same alpha
// and seed are identical. Throws NonConvergenceError when the relaxation
// misses the gradient tolerance.
InferResult infer(const PathSet& ps, const OrgTable* orgs,
                  const RunConfig& cfg);

struct SweepRow {
  double alpha = 0.0;
  double valid_pct = 0.0;
  double agree_alpha0_pct = 0.0;
  double agree_alpha1_pct = 0.0;
};

// One inference per requested alpha plus reference runs at 0 and 1;
// agreement columns compare directed labels against those references.
std::vector<SweepRow> alpha_sweep(const PathSet& ps, const OrgTable* orgs,
                                  const std::vector<double>& alphas,
                                  const RunConfig& cfg);

// CSV with header alpha,valid_pct,agree_alpha0_pct,agree_alpha1_pct.
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string report_json(const RunReport& r);

}  // namespace asrel
