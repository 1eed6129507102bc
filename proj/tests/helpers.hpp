/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rng.hpp"
#include "tor2sat.hpp"
#include "weighted.hpp"

namespace asrel::test {

// Literals ordered like the clause builder: by variable, negative first.
inline Clause mk_clause(int l1, int l2) {
  const auto key = [](int l) { return std::pair(l < 0 ? -l : l, l); };
  Clause c{l1, l2};
  if (key(c.b) < key(c.a)) std::swap(c.a, c.b);
  return c;
}

inline ClauseSet random_clauseset(SplitMix64& rng, int n_vars,
                                  int n_clauses) {
  std::set<Clause> out;
  for (int i = 0; i < n_clauses; ++i) {
    const int v1 = 1 + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(n_vars)));
    const int v2 = 1 + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(n_vars)));
    const int l1 = rng.next_below(2) ? v1 : -v1;
    int l2 = rng.next_below(2) ? v2 : -v2;
    if (l2 == -l1) l2 = -l2;  // a tautology carries no constraint
    out.insert(mk_clause(l1, l2));
  }
  ClauseSet cs;
  cs.clauses.assign(out.begin(), out.end());
  cs.num_vars = n_vars;
  return cs;
}

inline bool lit_true(int lit, const std::vector<char>& values) {
  const int v = lit > 0 ? lit : -lit;
  return lit > 0 ? values[static_cast<std::size_t>(v)] != 0
                 : values[static_cast<std::size_t>(v)] == 0;
}

inline bool clause_satisfied(const Clause& c, const std::vector<char>& values) {
  return lit_true(c.a, values) || lit_true(c.b, values);
}

// Exhaustive satisfiability check, usable up to ~20 variables.
inline bool brute_force_satisfiable(const ClauseSet& cs) {
  const int n = cs.num_vars;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<char> values(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
      values[static_cast<std::size_t>(v)] =
          static_cast<char>((mask >> (v - 1)) & 1);
    bool ok = true;
    for (const Clause& c : cs.clauses)
      if (!clause_satisfied(c, values)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return cs.clauses.empty();
}

// Uniform unit weights over an existing clause set; degrees are synthetic
// and only feed the (unused at alpha=1) 1-link terms.
inline WeightedInstance unit_weights(const ClauseSet& cs) {
  WeightedInstance inst;
  inst.num_vars = cs.num_vars;
  inst.alpha = 1.0;
  for (const Clause& c : cs.clauses) inst.clauses.push_back({c.a, c.b, 1.0});
  return inst;
}

// Random weighted 1- and 2-literal clauses with positive weights.
inline WeightedInstance random_weighted(SplitMix64& rng, int n_vars,
                                        int n_clauses) {
  WeightedInstance inst;
  inst.num_vars = n_vars;
  for (int i = 0; i < n_clauses; ++i) {
    const int v1 = 1 + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(n_vars)));
    int l1 = rng.next_below(2) ? v1 : -v1;
    int l2 = l1;
    if (rng.next_below(4) != 0) {  // three quarters 2-literal
      const int v2 = 1 + static_cast<int>(rng.next_below(
                             static_cast<std::uint64_t>(n_vars)));
      l2 = rng.next_below(2) ? v2 : -v2;
      if (l2 == -l1) l2 = -l2;
    }
    const Clause c = mk_clause(l1, l2);
    inst.clauses.push_back({c.a, c.b, 0.05 + rng.next_double()});
  }
  return inst;
}

}  // namespace asrel::test
