/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "asrel/asrel.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "relmap.hpp"
#include "synth.hpp"

struct asrel_pathset {
  asrel::PathSet ps;
};
struct asrel_orgs {
  asrel::OrgTable table;
};
struct asrel_relmap {
  asrel::RelationshipMap map;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes and the thread-local
// error message.
template <typename Fn>
asrel_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const asrel::ParseError& e) {
    set_error(e.what());
    return ASREL_ERR_PARSE;
  } catch (const asrel::NonConvergenceError& e) {
    set_error(e.what());
    return ASREL_ERR_NO_CONVERGENCE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return ASREL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ASREL_ERR_INTERNAL;
  }
}

asrel_status read_file(const char* path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_error(std::string("cannot open ") + path);
    return ASREL_ERR_IO;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    set_error(std::string("cannot read ") + path);
    return ASREL_ERR_IO;
  }
  out = buf.str();
  return ASREL_OK;
}

asrel::RunConfig to_run_config(const asrel_config& c) {
  asrel::RunConfig rc;
  rc.alpha = c.alpha;
  rc.seed = c.seed;
  rc.n_cuts = c.cuts;
  rc.rotation = c.rotation;
  rc.ortho_bias = c.ortho_bias;
  rc.restarts = c.restarts;
  rc.dim = c.dim;
  rc.max_iters = c.max_iters;
  rc.tolerance = c.tolerance;
  rc.jobs = c.jobs;
  return rc;
}

}  // namespace

extern "C" {

const char* asrel_version(void) { return "0.1.0"; }

const char* asrel_status_str(asrel_status s) {
  switch (s) {
    case ASREL_OK:
      return "ok";
    case ASREL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ASREL_ERR_PARSE:
      return "parse error";
    case ASREL_ERR_IO:
      return "io error";
    case ASREL_ERR_NO_CONVERGENCE:
      return "no convergence";
    case ASREL_ERR_UNSUPPORTED:
      return "unsupported";
    case ASREL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* asrel_last_error(void) { return g_last_error.c_str(); }

void asrel_string_free(char* s) { std::free(s); }

void asrel_config_init(asrel_config* cfg) {
  if (!cfg) return;
  cfg->alpha = 0.5;
  cfg->seed = 1;
  cfg->cuts = 200;
  cfg->rotation = 0.0;
  cfg->ortho_bias = 0.0;
  cfg->restarts = 3;
  cfg->dim = 0;
  cfg->max_iters = 5000;
  cfg->tolerance = 1e-7;
  cfg->jobs = 1;
}

void asrel_synth_params_init(asrel_synth_params* p) {
  if (!p) return;
  p->seed = 1;
  p->ases = 200;
  p->paths = 10000;
  p->corrupt = 0.0;
  p->tier1 = 0;
}

asrel_status asrel_pathset_parse(const char* text, asrel_pathset** out) {
  if (!text || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() {
    auto handle = std::make_unique<asrel_pathset>();
    handle->ps = asrel::parse_paths(text);
    *out = handle.release();
    return ASREL_OK;
  });
}

asrel_status asrel_pathset_load(const char* path, asrel_pathset** out) {
  if (!path || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  std::string text;
  const asrel_status st = read_file(path, text);
  if (st != ASREL_OK) return st;
  return asrel_pathset_parse(text.c_str(), out);
}

asrel_status asrel_pathset_stats_get(const asrel_pathset* ps,
                                     asrel_pathset_stats* out) {
  if (!ps || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  out->paths = static_cast<int64_t>(ps->ps.paths.size());
  out->ases = static_cast<int64_t>(ps->ps.graph.nodes.size());
  out->links = static_cast<int64_t>(ps->ps.graph.edges.size());
  out->pairs = static_cast<int64_t>(ps->ps.pairs.size());
  out->duplicates = static_cast<int64_t>(ps->ps.stats.duplicates);
  out->loops = static_cast<int64_t>(ps->ps.stats.loops);
  out->malformed = static_cast<int64_t>(ps->ps.stats.malformed);
  out->too_short = static_cast<int64_t>(ps->ps.stats.too_short);
  return ASREL_OK;
}

asrel_status asrel_pathset_serialize(const asrel_pathset* ps, char** out) {
  if (!ps || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = dup_string(asrel::serialize_paths(ps->ps));
  return *out ? ASREL_OK : ASREL_ERR_INTERNAL;
}

void asrel_pathset_free(asrel_pathset* ps) { delete ps; }

asrel_status asrel_orgs_parse(const char* text, asrel_orgs** out) {
  if (!text || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() {
    auto handle = std::make_unique<asrel_orgs>();
    handle->table = asrel::parse_orgs(text);
    *out = handle.release();
    return ASREL_OK;
  });
}

asrel_status asrel_orgs_load(const char* path, asrel_orgs** out) {
  if (!path || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  std::string text;
  const asrel_status st = read_file(path, text);
  if (st != ASREL_OK) return st;
  return asrel_orgs_parse(text.c_str(), out);
}

void asrel_orgs_free(asrel_orgs* orgs) { delete orgs; }

asrel_status asrel_infer(const asrel_pathset* ps, const asrel_orgs* orgs,
                         const asrel_config* cfg, asrel_relmap** out,
                         char** report_json_out) {
  if (!ps || !cfg || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  if (report_json_out) *report_json_out = nullptr;
  return guarded([&]() {
    asrel::InferResult res = asrel::infer(
        ps->ps, orgs ? &orgs->table : nullptr, to_run_config(*cfg));
    auto handle = std::make_unique<asrel_relmap>();
    handle->map = std::move(res.relmap);
    if (report_json_out) {
      *report_json_out = dup_string(asrel::report_json(res.report));
      if (!*report_json_out) return ASREL_ERR_INTERNAL;
    }
    *out = handle.release();
    return ASREL_OK;
  });
}

asrel_status asrel_sweep(const asrel_pathset* ps, const asrel_orgs* orgs,
                         const asrel_config* cfg, const double* alphas,
                         int32_t n_alphas, char** out_csv) {
  if (!ps || !cfg || !alphas || !out_csv || n_alphas < 1) {
    set_error("null argument or empty alpha grid");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out_csv = nullptr;
  return guarded([&]() {
    const std::vector<double> grid(alphas, alphas + n_alphas);
    const auto rows = asrel::alpha_sweep(
        ps->ps, orgs ? &orgs->table : nullptr, grid, to_run_config(*cfg));
    *out_csv = dup_string(asrel::sweep_csv(rows));
    return *out_csv ? ASREL_OK : ASREL_ERR_INTERNAL;
  });
}

asrel_status asrel_relmap_to_json(const asrel_relmap* m, char** out) {
  if (!m || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = dup_string(asrel::relmap_to_json(m->map));
  return *out ? ASREL_OK : ASREL_ERR_INTERNAL;
}

asrel_status asrel_relmap_parse(const char* json, asrel_relmap** out) {
  if (!json || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() {
    auto handle = std::make_unique<asrel_relmap>();
    handle->map = asrel::relmap_from_json(json);
    *out = handle.release();
    return ASREL_OK;
  });
}

asrel_status asrel_relmap_load(const char* path, asrel_relmap** out) {
  if (!path || !out) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  std::string text;
  const asrel_status st = read_file(path, text);
  if (st != ASREL_OK) return st;
  return asrel_relmap_parse(text.c_str(), out);
}

void asrel_relmap_free(asrel_relmap* m) { delete m; }

asrel_status asrel_validate(const asrel_pathset* ps, const asrel_relmap* m,
                            char** out_json) {
  if (!ps || !m || !out_json) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&]() {
    const asrel::ValidityReport r = asrel::validity(ps->ps.paths, m->map);
    *out_json = dup_string(asrel::validity_json(r));
    return *out_json ? ASREL_OK : ASREL_ERR_INTERNAL;
  });
}

asrel_status asrel_rank_csv(const asrel_relmap* m, char** out_csv) {
  if (!m || !out_csv) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out_csv = nullptr;
  return guarded([&]() {
    const asrel::HierarchyRank r = asrel::rank_hierarchy(m->map);
    *out_csv = dup_string(asrel::rank_csv(r));
    return *out_csv ? ASREL_OK : ASREL_ERR_INTERNAL;
  });
}

asrel_status asrel_gen_synth(const asrel_synth_params* p, char** out_paths,
                             asrel_relmap** out_truth,
                             char** out_meta_json) {
  if (!p || !out_paths) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out_paths = nullptr;
  if (out_truth) *out_truth = nullptr;
  if (out_meta_json) *out_meta_json = nullptr;
  return guarded([&]() {
    asrel::SynthParams sp;
    sp.seed = p->seed;
    sp.ases = p->ases;
    sp.paths = p->paths;
    sp.corrupt = p->corrupt;
    sp.tier1 = p->tier1;
    asrel::SynthResult res = asrel::gen_synth(sp);
    *out_paths = dup_string(res.paths_text);
    if (!*out_paths) return ASREL_ERR_INTERNAL;
    if (out_truth) {
      auto handle = std::make_unique<asrel_relmap>();
      handle->map = std::move(res.truth);
      *out_truth = handle.release();
    }
    if (out_meta_json) {
      nlohmann::ordered_json meta;
      meta["ases"] = p->ases;
      meta["paths"] = p->paths;
      meta["tier1"] = res.tier1;
      meta["corrupted"] = res.corrupted;
      *out_meta_json = dup_string(meta.dump(2) + "\n");
      if (!*out_meta_json) return ASREL_ERR_INTERNAL;
    }
    return ASREL_OK;
  });
}

asrel_status asrel_oracle_wcnf(const char* wcnf_text, char** out_json) {
  if (!wcnf_text || !out_json) {
    set_error("null argument");
    return ASREL_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&]() {
    const asrel::WeightedInstance inst = asrel::parse_wdimacs(wcnf_text);
    const asrel::Assignment best = asrel::brute_force_opt(inst);
    nlohmann::ordered_json j;
    j["variables"] = inst.num_vars;
    j["clauses"] = inst.clauses.size();
    j["optimum"] = best.objective;
    auto arr = nlohmann::ordered_json::array();
    for (int v = 1; v <= inst.num_vars; ++v)
      arr.push_back(best.values[static_cast<std::size_t>(v)] != 0);
    j["assignment"] = arr;
    *out_json = dup_string(j.dump(2) + "\n");
    return *out_json ? ASREL_OK : ASREL_ERR_INTERNAL;
  });
}

}  // extern "C"
