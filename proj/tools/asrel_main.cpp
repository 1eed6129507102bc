/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end. Talks to the library exclusively through the C
// interface, the way any external consumer would.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asrel/asrel.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;

int exit_code_for(asrel_status st) {
  switch (st) {
    case ASREL_OK:
      return kExitOk;
    case ASREL_ERR_NO_CONVERGENCE:
      return kExitNoConvergence;
    case ASREL_ERR_INVALID_ARGUMENT:
    case ASREL_ERR_PARSE:
    case ASREL_ERR_IO:
      return kExitInput;
    default:
      return 1;
  }
}

int fail(asrel_status st) {
  std::fprintf(stderr, "asrel: %s: %s\n", asrel_status_str(st),
               asrel_last_error());
  return exit_code_for(st);
}

// Writes through a temporary file in the same directory and renames, so a
// crash never leaves a half-written output and reruns replace atomically.
bool atomic_write(const std::string& path, const char* data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "asrel: io error: cannot open %s\n", tmp.c_str());
      return false;
    }
    out << data;
    if (!out.good()) {
      std::fprintf(stderr, "asrel: io error: cannot write %s\n", tmp.c_str());
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::fprintf(stderr, "asrel: io error: cannot replace %s: %s\n",
                 path.c_str(), ec.message().c_str());
    return false;
  }
  return true;
}

// Emits to a file when path is set, otherwise to stdout.
bool emit(const std::string& path, const char* data) {
  if (path.empty()) {
    std::fputs(data, stdout);
    return true;
  }
  return atomic_write(path, data);
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { asrel_string_free(s); }
};

struct PathsetIn {
  asrel_pathset* h = nullptr;
  ~PathsetIn() { asrel_pathset_free(h); }
};

struct OrgsIn {
  asrel_orgs* h = nullptr;
  ~OrgsIn() { asrel_orgs_free(h); }
};

struct RelmapIn {
  asrel_relmap* h = nullptr;
  ~RelmapIn() { asrel_relmap_free(h); }
};

std::string sibling_report_path(const std::string& out_path) {
  if (out_path.empty()) return "report.json";
  const std::filesystem::path p(out_path);
  return (p.parent_path() / "report.json").string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "asrel: AS business-relationship inference from BGP path sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", asrel_version());

  asrel_config cfg;
  asrel_config_init(&cfg);

  // infer -------------------------------------------------------------
  auto* infer = app.add_subcommand(
      "infer", "Label every link of a path set (JSON map + run report)");
  std::string in_paths, in_whois, out_file, report_file;
  infer->add_option("--paths", in_paths, "path file, one AS path per line")
      ->required();
  infer->add_option("--whois", in_whois,
                    "org table 'ASN<TAB>OrgName' for sibling detection");
  infer->add_option("--alpha", cfg.alpha,
                    "weight of invalid-path minimization, in [0,1]");
  infer->add_option("--seed", cfg.seed, "master seed for all random draws");
  infer->add_option("--cuts", cfg.cuts, "rounding hyperplanes, >= 1");
  infer->add_option("--rotation", cfg.rotation,
                    "pull of vectors toward the truth axis, in [0,1]");
  infer->add_option("--bias", cfg.ortho_bias,
                    "cut-normal shrink along the truth axis, in [0,1]");
  infer->add_option("--restarts", cfg.restarts, "extra random solver starts");
  infer->add_option("--dim", cfg.dim, "relaxation dimension, 0 = automatic");
  infer->add_option("--max-iters", cfg.max_iters, "ascent sweeps per start");
  infer->add_option("--tolerance", cfg.tolerance,
                    "projected-gradient norm target");
  infer->add_option("--jobs", cfg.jobs, "worker threads");
  infer->add_option("--out", out_file, "relationship JSON output (stdout)");
  infer->add_option("--report", report_file,
                    "run report path (default: report.json beside --out)");

  // sweep -------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Run one inference per alpha and tabulate validity/agreement");
  std::string sweep_alphas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  sweep->add_option("--paths", in_paths, "path file")->required();
  sweep->add_option("--whois", in_whois, "org table for sibling detection");
  sweep->add_option("--alphas", sweep_alphas, "comma-separated alpha grid");
  sweep->add_option("--seed", cfg.seed, "master seed");
  sweep->add_option("--cuts", cfg.cuts, "rounding hyperplanes per point");
  sweep->add_option("--rotation", cfg.rotation, "rotation, in [0,1]");
  sweep->add_option("--bias", cfg.ortho_bias, "cut-normal shrink, in [0,1]");
  sweep->add_option("--restarts", cfg.restarts, "extra random solver starts");
  sweep->add_option("--dim", cfg.dim, "relaxation dimension, 0 = automatic");
  sweep->add_option("--max-iters", cfg.max_iters, "ascent sweeps per start");
  sweep->add_option("--tolerance", cfg.tolerance, "gradient norm target");
  sweep->add_option("--jobs", cfg.jobs, "worker threads across points");
  sweep->add_option("--out", out_file, "CSV output (stdout)");

  // validate ----------------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "Valley-free fraction of a path set under a map");
  std::string rel_file;
  validate->add_option("--paths", in_paths, "path file")->required();
  validate->add_option("--rel", rel_file, "relationship JSON")->required();
  validate->add_option("--out", out_file, "JSON output (stdout)");

  // rank ----------------------------------------------------------------
  auto* rank = app.add_subcommand(
      "rank", "Provider-cone hierarchy ranking of a relationship map");
  rank->add_option("--rel", rel_file, "relationship JSON")->required();
  rank->add_option("--out", out_file, "CSV output (stdout)");

  // gen-synth ---------------------------------------------------------
  auto* gen = app.add_subcommand(
      "gen-synth", "Generate a synthetic provider hierarchy path set");
  asrel_synth_params sp;
  asrel_synth_params_init(&sp);
  std::string truth_file, meta_file;
  gen->add_option("--ases", sp.ases, "number of ASs, >= 12");
  gen->add_option("--count", sp.paths, "number of random paths");
  gen->add_option("--corrupt", sp.corrupt,
                  "fraction of extra policy-violating paths, in [0,1)");
  gen->add_option("--tier1", sp.tier1, "top-clique size (0 = automatic)");
  gen->add_option("--seed", sp.seed, "generator seed");
  gen->add_option("--out", out_file, "path file output (stdout)");
  gen->add_option("--truth", truth_file, "ground-truth JSON output");
  gen->add_option("--meta", meta_file, "tier-1/corruption JSON output");

  // oracle --------------------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive optimum of a wcnf instance (<= 20 variables)");
  std::string instance_file;
  oracle->add_option("--instance", instance_file, "wcnf file")->required();
  oracle->add_option("--out", out_file, "JSON output (stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return kExitInput;
  }

  if (infer->parsed() || sweep->parsed() || validate->parsed()) {
    PathsetIn ps;
    const asrel_status st = asrel_pathset_load(in_paths.c_str(), &ps.h);
    if (st != ASREL_OK) return fail(st);

    OrgsIn orgs;
    if (!in_whois.empty()) {
      const asrel_status ost = asrel_orgs_load(in_whois.c_str(), &orgs.h);
      if (ost != ASREL_OK) return fail(ost);
    }

    if (infer->parsed()) {
      RelmapIn rel;
      StringOut report;
      const asrel_status ist =
          asrel_infer(ps.h, orgs.h, &cfg, &rel.h, &report.s);
      if (ist != ASREL_OK) return fail(ist);
      StringOut json;
      const asrel_status jst = asrel_relmap_to_json(rel.h, &json.s);
      if (jst != ASREL_OK) return fail(jst);
      if (!emit(out_file, json.s)) return kExitInput;
      const std::string rp =
          report_file.empty() ? sibling_report_path(out_file) : report_file;
      if (!atomic_write(rp, report.s)) return kExitInput;
      return kExitOk;
    }

    if (sweep->parsed()) {
      std::vector<double> grid;
      std::string token;
      for (std::size_t i = 0; i <= sweep_alphas.size(); ++i) {
        if (i == sweep_alphas.size() || sweep_alphas[i] == ',') {
          if (!token.empty()) {
            try {
              grid.push_back(std::stod(token));
            } catch (const std::exception&) {
              std::fprintf(stderr, "asrel: bad alpha value: %s\n",
                           token.c_str());
              return kExitInput;
            }
            token.clear();
          }
        } else if (!std::isspace(static_cast<unsigned char>(sweep_alphas[i]))) {
          token += sweep_alphas[i];
        }
      }
      StringOut csv;
      const asrel_status sst =
          asrel_sweep(ps.h, orgs.h, &cfg, grid.data(),
                      static_cast<int32_t>(grid.size()), &csv.s);
      if (sst != ASREL_OK) return fail(sst);
      if (!emit(out_file, csv.s)) return kExitInput;
      return kExitOk;
    }

    // validate
    RelmapIn rel;
    const asrel_status rst = asrel_relmap_load(rel_file.c_str(), &rel.h);
    if (rst != ASREL_OK) return fail(rst);
    StringOut json;
    const asrel_status vst = asrel_validate(ps.h, rel.h, &json.s);
    if (vst != ASREL_OK) return fail(vst);
    if (!emit(out_file, json.s)) return kExitInput;
    return kExitOk;
  }

  if (rank->parsed()) {
    RelmapIn rel;
    const asrel_status rst = asrel_relmap_load(rel_file.c_str(), &rel.h);
    if (rst != ASREL_OK) return fail(rst);
    StringOut csv;
    const asrel_status cst = asrel_rank_csv(rel.h, &csv.s);
    if (cst != ASREL_OK) return fail(cst);
    if (!emit(out_file, csv.s)) return kExitInput;
    return kExitOk;
  }

  if (gen->parsed()) {
    StringOut paths;
    RelmapIn truth;
    StringOut meta;
    const asrel_status gst = asrel_gen_synth(
        &sp, &paths.s, truth_file.empty() ? nullptr : &truth.h,
        meta_file.empty() ? nullptr : &meta.s);
    if (gst != ASREL_OK) return fail(gst);
    if (!emit(out_file, paths.s)) return kExitInput;
    if (!truth_file.empty()) {
      StringOut json;
      const asrel_status jst = asrel_relmap_to_json(truth.h, &json.s);
      if (jst != ASREL_OK) return fail(jst);
      if (!atomic_write(truth_file, json.s)) return kExitInput;
    }
    if (!meta_file.empty() && !atomic_write(meta_file, meta.s))
      return kExitInput;
    return kExitOk;
  }

  if (oracle->parsed()) {
    std::ifstream in(instance_file, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "asrel: io error: cannot open %s\n",
                   instance_file.c_str());
      return kExitInput;
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    StringOut json;
    const asrel_status ost = asrel_oracle_wcnf(text.c_str(), &json.s);
    if (ost != ASREL_OK) return fail(ost);
    if (!emit(out_file, json.s)) return kExitInput;
    return kExitOk;
  }

  return kExitInput;
}
