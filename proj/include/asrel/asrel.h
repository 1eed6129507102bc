/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* asrel -- AS business-relationship inference from BGP path sets.
 *
 * C interface of the shared library. Heap objects are opaque handles
 * created and released through the functions below. Every fallible call
 * returns an asrel_status; on failure a diagnostic for the calling thread
 * is retrievable with asrel_last_error(). Strings handed back through
 * char** out parameters are owned by the caller and must be released with
 * asrel_string_free().
 */

#ifndef ASREL_H
#define ASREL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ASREL_API __declspec(dllexport)
#else
#define ASREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asrel_status {
  ASREL_OK = 0,
  ASREL_ERR_INVALID_ARGUMENT = 1,
  ASREL_ERR_PARSE = 2,
  ASREL_ERR_IO = 3,
  ASREL_ERR_NO_CONVERGENCE = 4,
  ASREL_ERR_UNSUPPORTED = 5,
  ASREL_ERR_INTERNAL = 6
} asrel_status;

typedef struct asrel_pathset asrel_pathset;
typedef struct asrel_orgs asrel_orgs;
typedef struct asrel_relmap asrel_relmap;

/* Resolved run parameters. Initialize with asrel_config_init() and then
 * override selected fields. All stochastic draws of a run derive from the
 * single master seed, so equal configs give byte-identical outputs
 * regardless of the jobs count. */
typedef struct asrel_config {
  double alpha;      /* [0,1]; 1 = minimize invalid paths only */
  uint64_t seed;     /* master seed for every random draw */
  int32_t cuts;      /* rounding hyperplanes per solve, >= 1 */
  double rotation;   /* [0,1]; pull of relaxed vectors toward the truth axis */
  double ortho_bias; /* [0,1]; bias of cut normals away from the truth axis */
  int32_t restarts;  /* extra random solver starts, >= 0 */
  int32_t dim;       /* relaxation dimension; 0 = automatic */
  int32_t max_iters; /* ascent sweeps per start, >= 1 */
  double tolerance;  /* projected-gradient norm target, > 0 */
  int32_t jobs;      /* worker threads for cuts and sweep points, >= 1 */
} asrel_config;

typedef struct asrel_pathset_stats {
  int64_t paths; /* distinct usable paths */
  int64_t ases;
  int64_t links;
  int64_t pairs; /* distinct adjacent link pairs */
  int64_t duplicates;
  int64_t loops;
  int64_t malformed;
  int64_t too_short;
} asrel_pathset_stats;

typedef struct asrel_synth_params {
  uint64_t seed;
  int32_t ases;       /* >= 12 */
  int32_t paths;      /* >= 1 */
  double corrupt;     /* [0,1); fraction of extra policy-violating paths */
  int32_t tier1;      /* top-clique size; 0 = automatic, 2 is rejected */
} asrel_synth_params;

ASREL_API const char *asrel_version(void);
ASREL_API const char *asrel_status_str(asrel_status s);
/* Message of the most recent failure on this thread; "" if none. */
ASREL_API const char *asrel_last_error(void);
ASREL_API void asrel_string_free(char *s);

ASREL_API void asrel_config_init(asrel_config *cfg);
ASREL_API void asrel_synth_params_init(asrel_synth_params *p);

/* --- path sets --------------------------------------------------------- */

/* Text format: one AS path per line, whitespace-separated decimal ASNs,
 * '#' starts a comment. Prepending repeats collapse; looping lines are
 * dropped. Fails with ASREL_ERR_PARSE when no usable path remains. */
ASREL_API asrel_status asrel_pathset_parse(const char *text,
                                           asrel_pathset **out);
ASREL_API asrel_status asrel_pathset_load(const char *path,
                                          asrel_pathset **out);
ASREL_API asrel_status asrel_pathset_stats_get(const asrel_pathset *ps,
                                               asrel_pathset_stats *out);
/* Canonical text form: distinct paths in ascending lexicographic order. */
ASREL_API asrel_status asrel_pathset_serialize(const asrel_pathset *ps,
                                               char **out);
ASREL_API void asrel_pathset_free(asrel_pathset *ps);

/* --- WHOIS organizations ------------------------------------------------ */

/* Text format: "ASN<TAB>OrgName" per line; later records win. */
ASREL_API asrel_status asrel_orgs_parse(const char *text, asrel_orgs **out);
ASREL_API asrel_status asrel_orgs_load(const char *path, asrel_orgs **out);
ASREL_API void asrel_orgs_free(asrel_orgs *orgs);

/* --- inference ----------------------------------------------------------- */

/* Labels every link of the path set. orgs may be NULL (skips sibling
 * detection); report_json may be NULL. Returns ASREL_ERR_NO_CONVERGENCE
 * when the relaxation fails to reach the gradient tolerance. */
ASREL_API asrel_status asrel_infer(const asrel_pathset *ps,
                                   const asrel_orgs *orgs,
                                   const asrel_config *cfg,
                                   asrel_relmap **out, char **report_json);

/* One inference per alpha; CSV with header
 * alpha,valid_pct,agree_alpha0_pct,agree_alpha1_pct. */
ASREL_API asrel_status asrel_sweep(const asrel_pathset *ps,
                                   const asrel_orgs *orgs,
                                   const asrel_config *cfg,
                                   const double *alphas, int32_t n_alphas,
                                   char **out_csv);

/* --- relationship maps --------------------------------------------------- */

/* JSON: {"edges":[{"a":701,"b":1,"rel":"c2p","prov":"rounded"},...]} where
 * for rel "c2p" the AS in "a" is a customer of the AS in "b". */
ASREL_API asrel_status asrel_relmap_to_json(const asrel_relmap *m, char **out);
ASREL_API asrel_status asrel_relmap_parse(const char *json,
                                          asrel_relmap **out);
ASREL_API asrel_status asrel_relmap_load(const char *path,
                                         asrel_relmap **out);
ASREL_API void asrel_relmap_free(asrel_relmap *m);

/* --- analytics ----------------------------------------------------------- */

/* Valley-free check of every path with at least two links; JSON
 * {"total":...,"valid":...,"fraction":...}. Fails when a path uses a link
 * the map does not label. */
ASREL_API asrel_status asrel_validate(const asrel_pathset *ps,
                                      const asrel_relmap *m, char **out_json);

/* Provider-cone ranking; CSV with header
 * asn,degree,reach,level,depth,width,is_leaf. */
ASREL_API asrel_status asrel_rank_csv(const asrel_relmap *m, char **out_csv);

/* --- fixtures and oracles ------------------------------------------------ */

/* Generates a synthetic provider hierarchy. out_paths receives the path
 * file text; out_truth (optional) the ground-truth map; out_meta_json
 * (optional) a JSON blob with the tier-1 ASNs and corruption count. */
ASREL_API asrel_status asrel_gen_synth(const asrel_synth_params *p,
                                       char **out_paths,
                                       asrel_relmap **out_truth,
                                       char **out_meta_json);

/* Exhaustive weighted-2SAT optimum of a wcnf instance (<= 20 variables);
 * JSON {"optimum":...,"assignment":[...]}. */
ASREL_API asrel_status asrel_oracle_wcnf(const char *wcnf_text,
                                         char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* ASREL_H */
