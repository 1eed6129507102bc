/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "errors.hpp"
#include "relax.hpp"
#include "rng.hpp"

namespace asrel {

namespace {

void check_config(const RunConfig& cfg) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  if (cfg.n_cuts < 1) throw std::invalid_argument("cuts must be >= 1");
  if (!(cfg.rotation >= 0.0 && cfg.rotation <= 1.0))
    throw std::invalid_argument("rotation must lie in [0,1]");
  if (!(cfg.ortho_bias >= 0.0 && cfg.ortho_bias <= 1.0))
    throw std::invalid_argument("ortho_bias must lie in [0,1]");
  if (cfg.restarts < 0) throw std::invalid_argument("restarts must be >= 0");
  if (cfg.dim < 0) throw std::invalid_argument("dim must be >= 0");
  if (cfg.max_iters < 1)
    throw std::invalid_argument("max_iters must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

// Everything that does not depend on alpha, shared across sweep points.
struct Prepared {
  std::vector<Edge> sibling_edges;
  Orientation orient;
  ClauseSet clauses;
  StripResult strip;
  std::vector<char> var_occurs;    // 1-based; variable appears in a clause
  std::vector<int> var_compact;    // 1-based; residual variable -> 1..m, 0 none
  std::vector<int> compact_edge;   // 1-based; compact variable -> edge index
  ClauseSet residual_compact;
  std::vector<DegreePair> degrees; // 1-based per compact variable
  std::size_t residual_fragments = 0;
};

Prepared prepare(const PathSet& ps, const OrgTable* orgs) {
  Prepared pr;
  if (orgs) pr.sibling_edges = infer_siblings(*orgs, ps.graph);
  pr.orient = orient_by_gradient(ps.graph, pr.sibling_edges);
  pr.clauses = build_clauses(ps.pairs, ps.graph, pr.orient);
  pr.strip = strip_nonconflict(pr.clauses);

  const int n = pr.orient.num_vars;
  pr.var_occurs.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Clause& c : pr.clauses.clauses) {
    pr.var_occurs[static_cast<std::size_t>(c.a > 0 ? c.a : -c.a)] = 1;
    pr.var_occurs[static_cast<std::size_t>(c.b > 0 ? c.b : -c.b)] = 1;
  }

  pr.var_compact.assign(static_cast<std::size_t>(n) + 1, 0);
  pr.compact_edge.push_back(-1);
  pr.degrees.push_back({});
  std::set<int> residual_vars;
  for (const Clause& c : pr.strip.residual.clauses) {
    residual_vars.insert(c.a > 0 ? c.a : -c.a);
    residual_vars.insert(c.b > 0 ? c.b : -c.b);
  }
  for (int v : residual_vars) {
    pr.var_compact[static_cast<std::size_t>(v)] =
        static_cast<int>(pr.compact_edge.size());
    const int edge = pr.orient.edge_of_var[static_cast<std::size_t>(v)];
    pr.compact_edge.push_back(edge);
    const Edge& e = ps.graph.edges[static_cast<std::size_t>(edge)];
    const std::uint32_t dlo = ps.graph.degree_of(e.lo);
    const std::uint32_t dhi = ps.graph.degree_of(e.hi);
    pr.degrees.push_back({std::min(dlo, dhi), std::max(dlo, dhi)});
  }
  pr.residual_compact.num_vars =
      static_cast<int>(pr.compact_edge.size()) - 1;
  for (const Clause& c : pr.strip.residual.clauses) {
    const auto remap = [&](int lit) {
      const int v = lit > 0 ? lit : -lit;
      const int cv = pr.var_compact[static_cast<std::size_t>(v)];
      return lit > 0 ? cv : -cv;
    };
    pr.residual_compact.clauses.push_back({remap(c.a), remap(c.b)});
  }

  std::set<Edge> residual_links;
  for (int v = 1; v <= n; ++v) {
    if (pr.var_compact[static_cast<std::size_t>(v)] == 0) continue;
    residual_links.insert(
        ps.graph
            .edges[static_cast<std::size_t>(
                pr.orient.edge_of_var[static_cast<std::size_t>(v)])]);
  }
  pr.residual_fragments =
      project_paths(ps.paths, [&](const Edge& e) {
        return residual_links.count(e) > 0;
      }).size();
  return pr;
}

// Per-alpha stage. The run seed folds the alpha bits into the master seed,
// so equal (seed, alpha) runs are identical wherever they appear.
InferResult infer_prepared(const PathSet& ps, const Prepared& pr,
                           const RunConfig& cfg) {
  check_config(cfg);
  const std::uint64_t run_seed =
      derive_seed(cfg.seed, "alpha", std::bit_cast<std::uint64_t>(cfg.alpha));

  RunReport rep;
  rep.config = cfg;
  rep.paths = ps.paths.size();
  rep.ases = ps.graph.nodes.size();
  rep.links = ps.graph.edges.size();
  rep.pairs = ps.pairs.size();
  rep.siblings = pr.sibling_edges.size();
  rep.variables = pr.orient.num_vars;
  rep.conflict_clauses = static_cast<int>(pr.clauses.clauses.size());
  rep.fixed_by_stripping = static_cast<int>(pr.strip.fixed_vars.size());
  rep.residual_vars = pr.residual_compact.num_vars;
  rep.residual_clauses =
      static_cast<int>(pr.residual_compact.clauses.size());
  rep.residual_fragments = pr.residual_fragments;
  int occurring = 0;
  for (int v = 1; v <= pr.orient.num_vars; ++v)
    if (pr.var_occurs[static_cast<std::size_t>(v)]) ++occurring;
  rep.gradient_default = pr.orient.num_vars - occurring;

  Assignment rounded;
  if (pr.residual_compact.num_vars > 0) {
    const WeightedInstance inst =
        build_weighted(pr.residual_compact, pr.degrees, cfg.alpha);
    rep.unary_weights_skipped = inst.skipped_unary;
    RelaxConfig rc;
    rc.dim = cfg.dim;
    rc.restarts = cfg.restarts;
    rc.max_iters = cfg.max_iters;
    rc.tolerance = cfg.tolerance;
    rc.seed = derive_seed(run_seed, "relax", 0);
    const VectorSolution sol = solve_relaxation(inst, rc);
    rep.solver_ran = true;
    rep.relax_objective = sol.objective;
    rep.solver_iterations = sol.iterations;
    rep.solver_grad_norm = sol.grad_norm;
    rep.solver_best_start = sol.best_start;
    if (!sol.converged) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "relaxation missed tolerance %.3g (gradient norm %.3g "
                    "after %d sweeps)",
                    cfg.tolerance, sol.grad_norm, sol.iterations);
      throw NonConvergenceError(buf);
    }
    RoundingConfig rdc;
    rdc.n_cuts = cfg.n_cuts;
    rdc.seed = derive_seed(run_seed, "round", 0);
    rdc.rotation = cfg.rotation;
    rdc.ortho_bias = cfg.ortho_bias;
    rdc.jobs = cfg.jobs;
    rounded = round_hyperplane(sol, inst, rdc);
    rep.rounded_objective = rounded.objective;
  }

  std::set<Edge> sib(pr.sibling_edges.begin(), pr.sibling_edges.end());
  std::vector<RelEdge> edges;
  edges.reserve(ps.graph.edges.size());
  for (std::size_t i = 0; i < ps.graph.edges.size(); ++i) {
    const Edge& e = ps.graph.edges[i];
    RelEdge r;
    if (sib.count(e)) {
      r.a = e.lo;
      r.b = e.hi;
      r.rel = Rel::sibling;
      r.prov = Provenance::sibling;
      edges.push_back(r);
      continue;
    }
    const int v = pr.orient.var_of_edge[i];
    const DirectedEdge& d = pr.orient.dir[i];
    bool keep = true;
    if (pr.strip.is_fixed[static_cast<std::size_t>(v)]) {
      r.prov = Provenance::fixed_by_stripping;
    } else if (pr.var_compact[static_cast<std::size_t>(v)] != 0) {
      r.prov = Provenance::rounded;
      keep = rounded.values[static_cast<std::size_t>(
                 pr.var_compact[static_cast<std::size_t>(v)])] != 0;
    } else {
      r.prov = Provenance::gradient_default;
    }
    r.rel = Rel::c2p;
    r.a = keep ? d.tail : d.head;
    r.b = keep ? d.head : d.tail;
    edges.push_back(r);
  }

  InferResult out{RelationshipMap(std::move(edges)), rep};
  out.report.validity = validity(ps.paths, out.relmap);
  return out;
}

}  // namespace

InferResult infer(const PathSet& ps, const OrgTable* orgs,
                  const RunConfig& cfg) {
  check_config(cfg);
  const Prepared pr = prepare(ps, orgs);
  return infer_prepared(ps, pr, cfg);
}

std::vector<SweepRow> alpha_sweep(const PathSet& ps, const OrgTable* orgs,
                                  const std::vector<double>& alphas,
                                  const RunConfig& cfg) {
  check_config(cfg);
  if (alphas.empty()) throw std::invalid_argument("alpha grid is empty");
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("alpha must lie in [0,1]");

  const Prepared pr = prepare(ps, orgs);
  const auto run_at = [&](double alpha, int jobs) {
    RunConfig c = cfg;
    c.alpha = alpha;
    c.jobs = jobs;
    return infer_prepared(ps, pr, c);
  };

  const InferResult ref0 = run_at(0.0, cfg.jobs);
  const InferResult ref1 = run_at(1.0, cfg.jobs);

  std::vector<InferResult> results(alphas.size());
  if (cfg.jobs <= 1 || alphas.size() == 1) {
    for (std::size_t i = 0; i < alphas.size(); ++i)
      results[i] = run_at(alphas[i], cfg.jobs);
  } else {
    // parallelize across rows, one thread's worth of cuts inside each
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    const int t = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(cfg.jobs), alphas.size()));
    for (int w = 0; w < t; ++w)
      workers.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= alphas.size()) return;
          results[i] = run_at(alphas[i], 1);
        }
      });
    for (auto& worker : workers) worker.join();
  }

  std::vector<SweepRow> rows(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    rows[i].alpha = alphas[i];
    rows[i].valid_pct = results[i].report.validity.fraction() * 100.0;
    rows[i].agree_alpha0_pct =
        agreement(results[i].relmap, ref0.relmap) * 100.0;
    rows[i].agree_alpha1_pct =
        agreement(results[i].relmap, ref1.relmap) * 100.0;
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha,valid_pct,agree_alpha0_pct,agree_alpha1_pct\n";
  char buf[160];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%g,%.4f,%.4f,%.4f\n", r.alpha,
                  r.valid_pct, r.agree_alpha0_pct, r.agree_alpha1_pct);
    out += buf;
  }
  return out;
}

std::string report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg;
  cfg["alpha"] = r.config.alpha;
  cfg["seed"] = r.config.seed;
  cfg["cuts"] = r.config.n_cuts;
  cfg["rotation"] = r.config.rotation;
  cfg["ortho_bias"] = r.config.ortho_bias;
  cfg["restarts"] = r.config.restarts;
  cfg["dim"] = r.config.dim;
  cfg["max_iters"] = r.config.max_iters;
  cfg["tolerance"] = r.config.tolerance;
  cfg["jobs"] = r.config.jobs;
  j["config"] = cfg;

  nlohmann::ordered_json in;
  in["paths"] = r.paths;
  in["ases"] = r.ases;
  in["links"] = r.links;
  in["adjacent_pairs"] = r.pairs;
  j["input"] = in;

  nlohmann::ordered_json st;
  st["siblings"] = r.siblings;
  st["variables"] = r.variables;
  st["conflict_clauses"] = r.conflict_clauses;
  st["fixed_by_stripping"] = r.fixed_by_stripping;
  st["gradient_default"] = r.gradient_default;
  st["residual_vars"] = r.residual_vars;
  st["residual_clauses"] = r.residual_clauses;
  st["residual_fragments"] = r.residual_fragments;
  j["structure"] = st;

  nlohmann::ordered_json sv;
  sv["ran"] = r.solver_ran;
  sv["relax_objective"] = r.relax_objective;
  sv["rounded_objective"] = r.rounded_objective;
  sv["iterations"] = r.solver_iterations;
  sv["grad_norm"] = r.solver_grad_norm;
  sv["best_start"] = r.solver_best_start;
  sv["unary_weights_skipped"] = r.unary_weights_skipped;
  j["solver"] = sv;

  nlohmann::ordered_json va;
  va["total"] = r.validity.total;
  va["valid"] = r.validity.valid;
  va["fraction"] = r.validity.fraction();
  j["validity"] = va;
  return j.dump(2) + "\n";
}

}  // namespace asrel
