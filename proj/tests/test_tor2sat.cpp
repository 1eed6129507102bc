/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "paths.hpp"
#include "rng.hpp"
#include "tor2sat.hpp"
#include "weighted.hpp"

using namespace asrel;
using namespace asrel::test;

namespace {

// Does the initial arrow of this link enter the AS `mid` after applying the
// boolean decision (true keeps, false reverses)?
bool arrow_enters(const Orientation& o, int edge_idx, Asn mid, bool keep) {
  const DirectedEdge& d = o.dir[static_cast<std::size_t>(edge_idx)];
  return keep ? d.head == mid : d.tail == mid;
}

}  // namespace

TEST_CASE("gradient orientation points from low degree to high degree") {
  // star around 2 gives deg(2)=3; 5 hangs off 3 so deg(3)=2
  const PathSet ps = parse_paths("1 2\n2 3\n2 4\n3 5\n");
  const Orientation o = orient_by_gradient(ps.graph, {});
  const int e23 = ps.graph.edge_index(Edge(2, 3));
  CHECK(o.dir[static_cast<std::size_t>(e23)].tail == 3);
  CHECK(o.dir[static_cast<std::size_t>(e23)].head == 2);
  const int e12 = ps.graph.edge_index(Edge(1, 2));
  CHECK(o.dir[static_cast<std::size_t>(e12)].tail == 1);
  CHECK(o.num_vars == static_cast<int>(ps.graph.edges.size()));
}

TEST_CASE("equal degrees tie-break toward the lower ASN as customer") {
  const PathSet ps = parse_paths("1 2\n");
  const Orientation o = orient_by_gradient(ps.graph, {});
  CHECK(o.dir[0].tail == 1);
  CHECK(o.dir[0].head == 2);
}

TEST_CASE("sibling links carry no variable") {
  const PathSet ps = parse_paths("1 2 3\n");
  const Orientation o = orient_by_gradient(ps.graph, {Edge(1, 2)});
  const int e12 = ps.graph.edge_index(Edge(1, 2));
  CHECK(o.var_of_edge[static_cast<std::size_t>(e12)] == 0);
  CHECK(o.dir[static_cast<std::size_t>(e12)].tail == 0);
  CHECK(o.num_vars == 1);

  const ClauseSet cs = build_clauses(ps.pairs, ps.graph, o);
  CHECK(cs.clauses.empty());  // the only pair touches the sibling link
}

TEST_CASE("clause polarity follows arrows entering the middle") {
  SUBCASE("both arrows enter the middle: both literals positive") {
    const PathSet ps = parse_paths("1 2 3\n");  // deg(2)=2 highest
    const Orientation o = orient_by_gradient(ps.graph, {});
    const ClauseSet cs = build_clauses(ps.pairs, ps.graph, o);
    REQUIRE(cs.clauses.size() == 1);
    CHECK(cs.clauses[0] == mk_clause(1, 2));
  }
  SUBCASE("both arrows leave the middle: both literals negative") {
    // middle 2 has degree 2; its neighbors collect degree 4 each
    const PathSet ps =
        parse_paths("1 2 3\n1 4\n1 5\n1 6\n3 7\n3 8\n3 9\n");
    const Orientation o = orient_by_gradient(ps.graph, {});
    const ClauseSet cs = build_clauses(ps.pairs, ps.graph, o);
    const int v1 = o.var_of_edge[static_cast<std::size_t>(
        ps.graph.edge_index(Edge(1, 2)))];
    const int v2 = o.var_of_edge[static_cast<std::size_t>(
        ps.graph.edge_index(Edge(2, 3)))];
    const Clause want = mk_clause(-v1, -v2);
    CHECK(std::count(cs.clauses.begin(), cs.clauses.end(), want) == 1);
  }
}

TEST_CASE("each clause forbids exactly the both-arrows-leave assignment") {
  SplitMix64 rng(derive_seed(11, "clause-pattern", 0));
  for (int round = 0; round < 20; ++round) {
    std::string text;
    for (int i = 0; i < 8; ++i) {
      const Asn a = 1 + static_cast<Asn>(rng.next_below(10));
      Asn b, c;
      do {
        b = 1 + static_cast<Asn>(rng.next_below(10));
      } while (b == a);
      do {
        c = 1 + static_cast<Asn>(rng.next_below(10));
      } while (c == a || c == b);
      text += std::to_string(a) + " " + std::to_string(b) + " " +
              std::to_string(c) + "\n";
    }
    const PathSet ps = parse_paths(text);
    const Orientation o = orient_by_gradient(ps.graph, {});
    const ClauseSet cs = build_clauses(ps.pairs, ps.graph, o);

    for (const AdjacentPair& p : ps.pairs) {
      const int e1 = ps.graph.edge_index(p.left());
      const int e2 = ps.graph.edge_index(p.right());
      const int v1 = o.var_of_edge[static_cast<std::size_t>(e1)];
      const int v2 = o.var_of_edge[static_cast<std::size_t>(e2)];
      if (v1 == v2) continue;
      const Clause emitted = mk_clause(
          o.dir[static_cast<std::size_t>(e1)].head == p.mid ? v1 : -v1,
          o.dir[static_cast<std::size_t>(e2)].head == p.mid ? v2 : -v2);
      REQUIRE(std::count(cs.clauses.begin(), cs.clauses.end(), emitted) == 1);
      int falsified = 0;
      for (int m = 0; m < 4; ++m) {
        const bool k1 = m & 1, k2 = m & 2;
        std::vector<char> values(static_cast<std::size_t>(cs.num_vars) + 1, 0);
        values[static_cast<std::size_t>(v1)] = k1;
        values[static_cast<std::size_t>(v2)] = k2;
        if (!clause_satisfied(emitted, values)) {
          falsified++;
          // the falsifying decision makes both arrows leave the middle
          CHECK_FALSE(arrow_enters(o, e1, p.mid, k1));
          CHECK_FALSE(arrow_enters(o, e2, p.mid, k2));
        }
      }
      CHECK(falsified == 1);
    }
  }
}

TEST_CASE("implication graph arcs and skew symmetry") {
  SUBCASE("binary clause yields the two contrapositive arcs") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(1, 2)};
    const ImplicationGraph g = build_implication_graph(cs);
    const std::set<std::pair<int, int>> arcs(g.arcs.begin(), g.arcs.end());
    CHECK(arcs.count({ImplicationGraph::vertex(-1),
                      ImplicationGraph::vertex(2)}) == 1);
    CHECK(arcs.count({ImplicationGraph::vertex(-2),
                      ImplicationGraph::vertex(1)}) == 1);
    CHECK(arcs.size() == 2);
  }
  SUBCASE("unary clause yields one arc") {
    ClauseSet cs;
    cs.num_vars = 1;
    cs.clauses = {mk_clause(1, 1)};
    const ImplicationGraph g = build_implication_graph(cs);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0] == std::pair(ImplicationGraph::vertex(-1),
                                 ImplicationGraph::vertex(1)));
  }
  SUBCASE("empty clause set yields no arcs") {
    ClauseSet cs;
    cs.num_vars = 3;
    const ImplicationGraph g = build_implication_graph(cs);
    CHECK(g.arcs.empty());
    CHECK(g.num_vars == 3);
  }
  SUBCASE("skew symmetry on random sets") {
    SplitMix64 rng(derive_seed(5, "skew", 0));
    for (int round = 0; round < 20; ++round) {
      const ClauseSet cs = random_clauseset(rng, 6, 15);
      const ImplicationGraph g = build_implication_graph(cs);
      const std::set<std::pair<int, int>> arcs(g.arcs.begin(), g.arcs.end());
      for (const auto& [u, v] : arcs)
        CHECK(arcs.count({ImplicationGraph::negate_vertex(v),
                          ImplicationGraph::negate_vertex(u)}) == 1);
    }
  }
}

TEST_CASE("two-sat verdicts match exhaustive search") {
  SUBCASE("single clause is satisfiable") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(1, 2)};
    const TwoSatResult r = solve_2sat(build_implication_graph(cs));
    REQUIRE(r.satisfiable);
    CHECK(clause_satisfied(cs.clauses[0], r.assignment));
  }
  SUBCASE("the four-clause contradiction is unsatisfiable") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(1, 2), mk_clause(-1, 2), mk_clause(1, -2),
                  mk_clause(-1, -2)};
    std::sort(cs.clauses.begin(), cs.clauses.end());
    const TwoSatResult r = solve_2sat(build_implication_graph(cs));
    CHECK_FALSE(r.satisfiable);
    CHECK(r.assignment.empty());
  }
  SUBCASE("random instances against the oracle") {
    SplitMix64 rng(derive_seed(13, "twosat-oracle", 0));
    for (int round = 0; round < 100; ++round) {
      const int n = 2 + static_cast<int>(rng.next_below(9));
      const int m = 1 + static_cast<int>(rng.next_below(30));
      const ClauseSet cs = random_clauseset(rng, n, m);
      const TwoSatResult r = solve_2sat(build_implication_graph(cs));
      CHECK(r.satisfiable == brute_force_satisfiable(cs));
      if (r.satisfiable) {
        REQUIRE(r.assignment.size() == static_cast<std::size_t>(n) + 1);
        for (const Clause& c : cs.clauses)
          CHECK(clause_satisfied(c, r.assignment));
      }
    }
  }
}

TEST_CASE("stripping fixes pure-positive variables and cascades") {
  SUBCASE("a fully positive clause is removed") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(1, 2)};
    const StripResult r = strip_nonconflict(cs);
    CHECK(r.fixed_vars == std::vector<int>{1, 2});
    CHECK(r.residual.clauses.empty());
    CHECK(r.removed_clauses == 1);
  }
  SUBCASE("removal exposes further fixable variables") {
    ClauseSet cs;
    cs.num_vars = 3;
    cs.clauses = {mk_clause(1, -2), mk_clause(2, -3)};
    std::sort(cs.clauses.begin(), cs.clauses.end());
    const StripResult r = strip_nonconflict(cs);
    CHECK(r.is_fixed[1]);
    CHECK(r.is_fixed[2]);
    CHECK(r.residual.clauses.empty());
    CHECK(r.removed_clauses == 2);
  }
  SUBCASE("conflicting structure survives") {
    ClauseSet cs;
    cs.num_vars = 2;
    cs.clauses = {mk_clause(-1, -2)};
    const StripResult r = strip_nonconflict(cs);
    CHECK(r.fixed_vars.empty());
    CHECK(r.residual.clauses.size() == 1);
  }
  SUBCASE("variables with no clause are untouched") {
    ClauseSet cs;
    cs.num_vars = 5;
    cs.clauses = {mk_clause(-1, -2)};
    const StripResult r = strip_nonconflict(cs);
    for (int v = 3; v <= 5; ++v) CHECK_FALSE(r.is_fixed[v]);
  }
}

TEST_CASE("every residual variable keeps a negative occurrence") {
  SplitMix64 rng(derive_seed(17, "strip-prop", 0));
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const int m = 1 + static_cast<int>(rng.next_below(25));
    const ClauseSet cs = random_clauseset(rng, n, m);
    const StripResult r = strip_nonconflict(cs);
    std::vector<int> neg(static_cast<std::size_t>(n) + 1, 0);
    std::set<int> vars;
    for (const Clause& c : r.residual.clauses)
      for (int lit : {c.a, c.b}) {
        vars.insert(lit > 0 ? lit : -lit);
        if (lit < 0) neg[static_cast<std::size_t>(-lit)]++;
      }
    for (int v : vars) {
      CHECK(neg[static_cast<std::size_t>(v)] >= 1);
      CHECK_FALSE(r.is_fixed[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("stripping preserves the uniform-weight optimum") {
  SplitMix64 rng(derive_seed(19, "strip-opt", 0));
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const int m = 1 + static_cast<int>(rng.next_below(20));
    const ClauseSet cs = random_clauseset(rng, n, m);
    const StripResult r = strip_nonconflict(cs);
    const double opt_orig = brute_force_opt(unit_weights(cs)).objective;
    const double opt_res =
        brute_force_opt(unit_weights(r.residual)).objective;
    CHECK(opt_orig ==
          doctest::Approx(static_cast<double>(r.removed_clauses) + opt_res)
              .epsilon(1e-12));
  }
}

TEST_CASE("path projection splits at dropped links") {
  const std::vector<AsPath> paths = {{1, 2, 3, 4}, {5, 6}};
  SUBCASE("dropping one middle link splits a path") {
    const auto frags = project_paths(paths, [](const Edge& e) {
      return !(e == Edge(2, 3));
    });
    REQUIRE(frags.size() == 3);
    CHECK(frags[0] == AsPath{1, 2});
    CHECK(frags[1] == AsPath{3, 4});
    CHECK(frags[2] == AsPath{5, 6});
  }
  SUBCASE("keeping everything is the identity") {
    const auto frags = project_paths(paths, [](const Edge&) { return true; });
    CHECK(frags == paths);
  }
  SUBCASE("dropping everything leaves nothing") {
    const auto frags = project_paths(paths, [](const Edge&) { return false; });
    CHECK(frags.empty());
  }
}

TEST_CASE("clause dump is in weighted DIMACS shape") {
  ClauseSet cs;
  cs.num_vars = 2;
  cs.clauses = {mk_clause(1, -2)};
  const std::string text = to_dimacs(cs);
  CHECK(text.find("p wcnf 2 1") != std::string::npos);
  CHECK(text.find("1 -2") != std::string::npos);
}
