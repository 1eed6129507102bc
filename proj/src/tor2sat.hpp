/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "paths.hpp"

namespace asrel {

// Directed link: customer at tail, provider at head.
struct DirectedEdge {
  Asn tail = 0;
  Asn head = 0;
};

// Initial orientation of every non-sibling link plus its boolean variable.
// Variable v (1-based) true means the link keeps this orientation, false
// means it is reversed. Sibling links carry no variable.
struct Orientation {
  std::vector<DirectedEdge> dir;  // parallel to graph.edges; {0,0} siblings
  std::vector<int> var_of_edge;   // parallel to graph.edges; 0 = sibling
  std::vector<int> edge_of_var;   // 1-based; edge index per variable
  int num_vars = 0;
};

// Two DIMACS-style literals; a == b encodes a single-literal clause.
struct Clause {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

struct ClauseSet {
  std::vector<Clause> clauses;  // ascending, distinct
  int num_vars = 0;
};

// Graph over 2*num_vars literal vertices with one arc pair per clause:
// (l1 v l2) contributes -l1 -> l2 and -l2 -> l1.
struct ImplicationGraph {
  int num_vars = 0;
  std::vector<std::pair<int, int>> arcs;  // ascending, distinct

  static int vertex(int lit) {
    const int v = lit > 0 ? lit : -lit;
    return 2 * (v - 1) + (lit < 0 ? 1 : 0);
  }
  static int negate_vertex(int w) { return w ^ 1; }
};

struct TwoSatResult {
  bool satisfiable = false;
  // 1-based; empty when unsatisfiable.
  std::vector<char> assignment;
};

struct StripResult {
  std::vector<int> fixed_vars;    // ascending; fixed to true (keep direction)
  std::vector<char> is_fixed;     // 1-based lookup
  ClauseSet residual;             // surviving clauses, original variable ids
  ImplicationGraph residual_graph;
  std::size_t removed_clauses = 0;
};

// Directs every non-sibling link from its lower-degree endpoint to its
// higher-degree endpoint; equal degrees go from the lower ASN to the higher.
Orientation orient_by_gradient(const AsGraph& graph,
                               const std::vector<Edge>& siblings);

// One clause per adjacent link pair whose links both carry variables. The
// literal of a link is positive when its initial orientation already points
// at the middle AS; the clause states that at least one of the two links
// points at the middle, which is exactly the valley-free condition for the
// pair under both traversal directions.
ClauseSet build_clauses(const std::vector<AdjacentPair>& pairs,
                        const AsGraph& graph, const Orientation& orient);

ImplicationGraph build_implication_graph(const ClauseSet& cs);

// Strongly-connected-component decision procedure. When satisfiable, the
// returned assignment satisfies every clause of the originating set.
TwoSatResult solve_2sat(const ImplicationGraph& g);

// Repeatedly fixes to true every variable that occurs in live clauses only
// positively (its link can keep the initial direction without ever creating
// a policy violation) and removes the clauses this satisfies, until no such
// variable remains. Variables with no clause at all are left untouched.
StripResult strip_nonconflict(const ClauseSet& cs);

// Splits paths at links for which keep_link is false; fragments keep their
// order and only fragments with at least one link survive.
std::vector<AsPath> project_paths(
    const std::vector<AsPath>& paths,
    const std::function<bool(const Edge&)>& keep_link);

// Debug dump: "p wcnf <vars> <clauses>" followed by unit-weight clauses.
std::string to_dimacs(const ClauseSet& cs);

}  // namespace asrel
