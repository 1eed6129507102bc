/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "relax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rng.hpp"

namespace asrel {

namespace {

// F(R) = constant + sum over listed pairs c * (row_p . row_q). Each
// unordered pair appears in both adjacency lists.
struct Coupling {
  std::vector<std::vector<std::pair<int, double>>> adj;
  double constant = 0.0;
};

Coupling build_coupling(const WeightedInstance& inst) {
  Coupling cp;
  cp.adj.assign(static_cast<std::size_t>(inst.num_vars) + 1, {});
  const auto add = [&](int p, int q, double c) {
    if (c == 0.0) return;
    cp.adj[static_cast<std::size_t>(p)].push_back({q, c});
    cp.adj[static_cast<std::size_t>(q)].push_back({p, c});
  };
  for (const WClause& c : inst.clauses) {
    const int va = c.a > 0 ? c.a : -c.a;
    const int vb = c.b > 0 ? c.b : -c.b;
    const double sa = c.a > 0 ? 1.0 : -1.0;
    const double sb = c.b > 0 ? 1.0 : -1.0;
    if (va == vb) {
      if (c.a == c.b) {
        cp.constant += c.w / 2.0;
        add(0, va, c.w * sa / 2.0);
      } else {
        cp.constant += c.w;  // tautology (l v -l)
      }
    } else {
      cp.constant += 0.75 * c.w;
      add(0, va, c.w * sa / 4.0);
      add(0, vb, c.w * sb / 4.0);
      add(va, vb, -c.w * sa * sb / 4.0);
    }
  }
  // merge parallel couplings for a deterministic, compact sweep
  for (auto& list : cp.adj) {
    std::sort(list.begin(), list.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < list.size();) {
      std::size_t j = i;
      double sum = 0.0;
      while (j < list.size() && list[j].first == list[i].first)
        sum += list[j++].second;
      list[out++] = {list[i].first, sum};
      i = j;
    }
    list.resize(out);
  }
  return cp;
}

double coupling_value(const Coupling& cp,
                      const std::vector<Eigen::VectorXd>& rows) {
  double twice = 0.0;
  for (std::size_t p = 0; p < cp.adj.size(); ++p)
    for (const auto& [q, c] : cp.adj[p])
      twice += c * rows[p].dot(rows[static_cast<std::size_t>(q)]);
  return cp.constant + twice / 2.0;
}

double projected_grad_norm(const Coupling& cp,
                           const std::vector<Eigen::VectorXd>& rows) {
  double sq = 0.0;
  Eigen::VectorXd g(rows[0].size());
  for (std::size_t p = 0; p < cp.adj.size(); ++p) {
    g.setZero();
    for (const auto& [q, c] : cp.adj[p])
      g += c * rows[static_cast<std::size_t>(q)];
    g -= g.dot(rows[p]) * rows[p];
    sq += g.squaredNorm();
  }
  return std::sqrt(sq);
}

struct AscentResult {
  double objective = 0.0;
  int sweeps = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

// Block-coordinate ascent: each row moves to the normalized sum of its
// coupled rows, which maximizes F over that row alone. Rows with zero
// gradient stay in place.
AscentResult ascend(const Coupling& cp, std::vector<Eigen::VectorXd>& rows,
                    int max_iters, double tol) {
  AscentResult res;
  Eigen::VectorXd g(rows[0].size());
  for (res.sweeps = 0; res.sweeps < max_iters;) {
    for (std::size_t p = 0; p < cp.adj.size(); ++p) {
      g.setZero();
      for (const auto& [q, c] : cp.adj[p])
        g += c * rows[static_cast<std::size_t>(q)];
      const double norm = g.norm();
      if (norm > 0.0) rows[p] = g / norm;
    }
    ++res.sweeps;
    res.grad_norm = projected_grad_norm(cp, rows);
    if (res.grad_norm <= tol) {
      res.converged = true;
      break;
    }
  }
  res.objective = coupling_value(cp, rows);
  return res;
}

int auto_dim(int num_vars) {
  if (num_vars <= 0) return 1;
  const int root =
      static_cast<int>(std::ceil(std::sqrt(2.0 * num_vars))) + 1;
  return std::min(num_vars + 1, root);
}

}  // namespace

VectorSolution solve_relaxation(const WeightedInstance& inst,
                                const RelaxConfig& cfg) {
  if (cfg.restarts < 0) throw std::invalid_argument("restarts must be >= 0");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  if (cfg.dim < 0) throw std::invalid_argument("dim must be >= 0");

  const int n = inst.num_vars;
  const int dim = cfg.dim > 0 ? cfg.dim : auto_dim(n);
  const Coupling cp = build_coupling(inst);

  VectorSolution best;
  best.dim = dim;
  best.objective = -std::numeric_limits<double>::infinity();

  std::vector<Eigen::VectorXd> rows(static_cast<std::size_t>(n) + 1);
  for (int start = 0; start <= cfg.restarts; ++start) {
    SplitMix64 rng(derive_seed(cfg.seed, "relax-start",
                               static_cast<std::uint64_t>(start)));
    for (auto& r : rows) {
      r.resize(dim);
      if (start == 0) {
        // aligned start: every vector on the truth axis, so variables with
        // no pull anywhere (zero-weight rows) never leave it
        r.setZero();
        r(0) = 1.0;
      } else {
        for (int k = 0; k < dim; ++k) r(k) = rng.next_gaussian();
        const double norm = r.norm();
        if (norm > 0.0)
          r /= norm;
        else
          r(0) = 1.0;
      }
    }

    AscentResult res = ascend(cp, rows, cfg.max_iters, cfg.tolerance);
    int sweeps = res.sweeps;

    // a converged point may still be a saddle; nudge and re-ascend while
    // that strictly improves the objective
    for (int round = 0; round < 2 && res.converged; ++round) {
      std::vector<Eigen::VectorXd> trial = rows;
      for (auto& r : trial) {
        for (int k = 0; k < dim; ++k) r(k) += 0.01 * rng.next_gaussian();
        const double norm = r.norm();
        if (norm > 0.0) r /= norm;
      }
      AscentResult res2 =
          ascend(cp, trial, cfg.max_iters, cfg.tolerance);
      sweeps += res2.sweeps;
      if (res2.objective > res.objective + 1e-12) {
        rows = std::move(trial);
        res = res2;
      } else {
        break;
      }
    }

    best.iterations += sweeps;
    if (res.objective > best.objective) {
      best.objective = res.objective;
      best.grad_norm = res.grad_norm;
      best.converged = res.converged;
      best.best_start = start;
      best.v0 = rows[0];
      best.v.assign(rows.begin() + 1, rows.end());
    }
  }

  // report the exact clause-form value of the winning configuration
  best.objective = relaxation_objective(inst, best.v0, best.v);
  return best;
}

double relaxation_objective(const WeightedInstance& inst,
                            const Eigen::VectorXd& v0,
                            const std::vector<Eigen::VectorXd>& v) {
  if (v.size() != static_cast<std::size_t>(inst.num_vars))
    throw std::invalid_argument("vector count must match variable count");
  double total = 0.0;
  for (const WClause& c : inst.clauses) {
    const int va = c.a > 0 ? c.a : -c.a;
    const int vb = c.b > 0 ? c.b : -c.b;
    const double sa = c.a > 0 ? 1.0 : -1.0;
    const double sb = c.b > 0 ? 1.0 : -1.0;
    const Eigen::VectorXd& ra = v[static_cast<std::size_t>(va - 1)];
    const Eigen::VectorXd& rb = v[static_cast<std::size_t>(vb - 1)];
    if (va == vb) {
      if (c.a == c.b)
        total += c.w / 2.0 * (1.0 + sa * v0.dot(ra));
      else
        total += c.w;
    } else {
      total += c.w / 4.0 *
               (3.0 + sa * v0.dot(ra) + sb * v0.dot(rb) -
                sa * sb * ra.dot(rb));
    }
  }
  return total;
}

Assignment round_hyperplane(const VectorSolution& sol,
                            const WeightedInstance& inst,
                            const RoundingConfig& cfg) {
  if (cfg.n_cuts < 1) throw std::invalid_argument("n_cuts must be >= 1");
  if (!(cfg.rotation >= 0.0 && cfg.rotation <= 1.0))
    throw std::invalid_argument("rotation must lie in [0,1]");
  if (!(cfg.ortho_bias >= 0.0 && cfg.ortho_bias <= 1.0))
    throw std::invalid_argument("ortho_bias must lie in [0,1]");
  const int n = inst.num_vars;
  if (sol.v.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("solution does not match instance");

  // rotation pulls every vector toward the truth axis, sharpening cuts at
  // the cost of exploration; gamma = 1 collapses onto +-v0
  std::vector<Eigen::VectorXd> u(sol.v.size());
  const double gamma = cfg.rotation;
  for (std::size_t i = 0; i < sol.v.size(); ++i) {
    if (gamma == 0.0) {
      u[i] = sol.v[i];
    } else {
      const double side = sol.v0.dot(sol.v[i]) < 0.0 ? -1.0 : 1.0;
      u[i] = (1.0 - gamma) * sol.v[i] + gamma * side * sol.v0;
      if (u[i].norm() == 0.0)
        throw std::runtime_error("rotation produced a zero vector");
    }
  }

  struct CutBest {
    double objective = -std::numeric_limits<double>::infinity();
    int cut = -1;
    std::vector<char> values;
  };

  const auto run_range = [&](int lo, int hi, CutBest& out) {
    std::vector<char> values(static_cast<std::size_t>(n) + 1, 0);
    Eigen::VectorXd h(sol.dim);
    for (int j = lo; j < hi; ++j) {
      SplitMix64 rng(
          derive_seed(cfg.seed, "cut", static_cast<std::uint64_t>(j)));
      for (int k = 0; k < sol.dim; ++k) h(k) = rng.next_gaussian();
      if (cfg.ortho_bias > 0.0) h -= cfg.ortho_bias * h.dot(sol.v0) * sol.v0;
      const bool side0 = h.dot(sol.v0) >= 0.0;
      for (int v = 1; v <= n; ++v)
        values[static_cast<std::size_t>(v)] =
            ((h.dot(u[static_cast<std::size_t>(v - 1)]) >= 0.0) == side0)
                ? 1
                : 0;
      const double obj = objective_value(inst, values);
      if (obj > out.objective) {
        out.objective = obj;
        out.cut = j;
        out.values = values;
      }
    }
  };

  const int jobs = std::max(1, std::min(cfg.jobs, cfg.n_cuts));
  std::vector<CutBest> partial(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    run_range(0, cfg.n_cuts, partial[0]);
  } else {
    std::vector<std::thread> workers;
    const int chunk = (cfg.n_cuts + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(cfg.n_cuts, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back(
          [&, lo, hi, t]() { run_range(lo, hi, partial[static_cast<std::size_t>(t)]); });
    }
    for (auto& w : workers) w.join();
  }

  CutBest best;
  for (const CutBest& p : partial) {
    if (p.cut < 0) continue;
    if (p.objective > best.objective ||
        (p.objective == best.objective && best.cut >= 0 && p.cut < best.cut)) {
      best = p;
    }
  }

  Assignment out;
  out.values = best.cut >= 0
                   ? best.values
                   : std::vector<char>(static_cast<std::size_t>(n) + 1, 0);
  out.objective = best.cut >= 0 ? best.objective : 0.0;
  return out;
}

}  // namespace asrel
