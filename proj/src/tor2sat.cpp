/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "tor2sat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace asrel {

Orientation orient_by_gradient(const AsGraph& graph,
                               const std::vector<Edge>& siblings) {
  std::set<Edge> sib(siblings.begin(), siblings.end());
  Orientation o;
  o.dir.resize(graph.edges.size());
  o.var_of_edge.assign(graph.edges.size(), 0);
  o.edge_of_var.push_back(-1);  // 1-based
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const Edge& e = graph.edges[i];
    if (sib.count(e)) continue;
    const std::uint32_t dlo = graph.degree_of(e.lo);
    const std::uint32_t dhi = graph.degree_of(e.hi);
    // strictly smaller degree is the customer; ties go lower ASN -> higher
    DirectedEdge d;
    if (dhi < dlo) {
      d.tail = e.hi;
      d.head = e.lo;
    } else {
      d.tail = e.lo;
      d.head = e.hi;
    }
    o.dir[i] = d;
    o.var_of_edge[i] = ++o.num_vars;
    o.edge_of_var.push_back(static_cast<int>(i));
  }
  return o;
}

ClauseSet build_clauses(const std::vector<AdjacentPair>& pairs,
                        const AsGraph& graph, const Orientation& orient) {
  std::set<Clause> out;
  for (const AdjacentPair& p : pairs) {
    const int e1 = graph.edge_index(p.left());
    const int e2 = graph.edge_index(p.right());
    if (e1 < 0 || e2 < 0)
      throw std::logic_error("adjacent pair references an unknown link");
    const int v1 = orient.var_of_edge[static_cast<std::size_t>(e1)];
    const int v2 = orient.var_of_edge[static_cast<std::size_t>(e2)];
    if (v1 == 0 || v2 == 0) continue;  // sibling links never conflict
    // literal is positive when the initial orientation enters the middle
    const int l1 =
        orient.dir[static_cast<std::size_t>(e1)].head == p.mid ? v1 : -v1;
    const int l2 =
        orient.dir[static_cast<std::size_t>(e2)].head == p.mid ? v2 : -v2;
    Clause c{l1, l2};
    const auto key = [](int l) { return std::pair(l < 0 ? -l : l, l); };
    if (key(c.b) < key(c.a)) std::swap(c.a, c.b);
    out.insert(c);
  }
  ClauseSet cs;
  cs.clauses.assign(out.begin(), out.end());
  cs.num_vars = orient.num_vars;
  return cs;
}

ImplicationGraph build_implication_graph(const ClauseSet& cs) {
  ImplicationGraph g;
  g.num_vars = cs.num_vars;
  std::set<std::pair<int, int>> arcs;
  for (const Clause& c : cs.clauses) {
    arcs.emplace(ImplicationGraph::vertex(-c.a), ImplicationGraph::vertex(c.b));
    arcs.emplace(ImplicationGraph::vertex(-c.b), ImplicationGraph::vertex(c.a));
  }
  g.arcs.assign(arcs.begin(), arcs.end());
  return g;
}

namespace {

// Iterative Tarjan decomposition. Component ids are assigned in reverse
// topological order of the condensation: every component reachable from c
// has an id smaller than c's.
std::vector<int> tarjan_components(int n,
                                   const std::vector<std::pair<int, int>>& arcs,
                                   int& num_comps) {
  std::vector<int> head(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : arcs) head[static_cast<std::size_t>(a.first) + 1]++;
  for (int i = 0; i < n; ++i) head[static_cast<std::size_t>(i) + 1] += head[i];
  std::vector<int> adj(arcs.size());
  {
    std::vector<int> fill(head.begin(), head.end() - 1);
    for (const auto& a : arcs) adj[static_cast<std::size_t>(fill[a.first]++)] = a.second;
  }

  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), kUnvisited);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    int next;  // offset into adj within [head[v], head[v+1])
  };
  std::vector<Frame> frames;
  int counter = 0;
  num_comps = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, head[root]});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.v;
      if (f.next < head[static_cast<std::size_t>(v) + 1]) {
        const int w = adj[static_cast<std::size_t>(f.next++)];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, head[w]});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = num_comps;
            if (w == v) break;
          }
          num_comps++;
        }
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] =
              std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
  return comp;
}

}  // namespace

TwoSatResult solve_2sat(const ImplicationGraph& g) {
  TwoSatResult r;
  int num_comps = 0;
  const std::vector<int> comp =
      tarjan_components(2 * g.num_vars, g.arcs, num_comps);
  r.satisfiable = true;
  r.assignment.assign(static_cast<std::size_t>(g.num_vars) + 1, 0);
  for (int v = 1; v <= g.num_vars; ++v) {
    const int cp = comp[static_cast<std::size_t>(2 * (v - 1))];
    const int cn = comp[static_cast<std::size_t>(2 * (v - 1) + 1)];
    if (cp == cn) {
      r.satisfiable = false;
      r.assignment.clear();
      return r;
    }
    // component ids are reverse-topological, so the smaller id is the one
    // later in topological order; a variable is true when its positive
    // literal comes after its negation
    r.assignment[static_cast<std::size_t>(v)] = cp < cn ? 1 : 0;
  }
  return r;
}

StripResult strip_nonconflict(const ClauseSet& cs) {
  StripResult r;
  const int n = cs.num_vars;
  const std::size_t m = cs.clauses.size();
  std::vector<std::vector<int>> pos_in(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> neg_in(static_cast<std::size_t>(n) + 1);
  std::vector<int> neg_live(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> occurs(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> live(m, 1);
  r.is_fixed.assign(static_cast<std::size_t>(n) + 1, 0);

  auto note = [&](int lit, int ci) {
    const int v = lit > 0 ? lit : -lit;
    if (v < 1 || v > n) throw std::logic_error("clause literal out of range");
    occurs[static_cast<std::size_t>(v)] = 1;
    if (lit > 0)
      pos_in[static_cast<std::size_t>(v)].push_back(ci);
    else {
      neg_in[static_cast<std::size_t>(v)].push_back(ci);
      neg_live[static_cast<std::size_t>(v)]++;
    }
  };
  for (std::size_t ci = 0; ci < m; ++ci) {
    note(cs.clauses[ci].a, static_cast<int>(ci));
    note(cs.clauses[ci].b, static_cast<int>(ci));
  }

  std::vector<int> queue;
  std::vector<char> queued(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (occurs[static_cast<std::size_t>(v)] &&
        neg_live[static_cast<std::size_t>(v)] == 0) {
      queue.push_back(v);
      queued[static_cast<std::size_t>(v)] = 1;
    }
  }

  std::size_t qi = 0;
  while (qi < queue.size()) {
    const int v = queue[qi++];
    r.is_fixed[static_cast<std::size_t>(v)] = 1;
    for (int ci : pos_in[static_cast<std::size_t>(v)]) {
      if (!live[static_cast<std::size_t>(ci)]) continue;
      live[static_cast<std::size_t>(ci)] = 0;
      r.removed_clauses++;
      for (int lit : {cs.clauses[static_cast<std::size_t>(ci)].a,
                      cs.clauses[static_cast<std::size_t>(ci)].b}) {
        if (lit >= 0) continue;
        const int w = -lit;
        if (--neg_live[static_cast<std::size_t>(w)] == 0 &&
            !queued[static_cast<std::size_t>(w)] &&
            occurs[static_cast<std::size_t>(w)]) {
          queue.push_back(w);
          queued[static_cast<std::size_t>(w)] = 1;
        }
      }
    }
  }

  for (int v = 1; v <= n; ++v)
    if (r.is_fixed[static_cast<std::size_t>(v)]) r.fixed_vars.push_back(v);

  r.residual.num_vars = n;
  for (std::size_t ci = 0; ci < m; ++ci)
    if (live[ci]) r.residual.clauses.push_back(cs.clauses[ci]);
  r.residual_graph = build_implication_graph(r.residual);
  return r;
}

std::vector<AsPath> project_paths(
    const std::vector<AsPath>& paths,
    const std::function<bool(const Edge&)>& keep_link) {
  std::vector<AsPath> out;
  for (const AsPath& p : paths) {
    AsPath frag;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (frag.empty()) {
        frag.push_back(p[i]);
        continue;
      }
      if (keep_link(Edge(frag.back(), p[i]))) {
        frag.push_back(p[i]);
      } else {
        if (frag.size() >= 2) out.push_back(frag);
        frag.clear();
        frag.push_back(p[i]);
      }
    }
    if (frag.size() >= 2) out.push_back(frag);
  }
  return out;
}

std::string to_dimacs(const ClauseSet& cs) {
  std::string out = "c 2sat clause dump\n";
  out += "p wcnf " + std::to_string(cs.num_vars) + " " +
         std::to_string(cs.clauses.size()) + "\n";
  for (const Clause& c : cs.clauses) {
    out += "1 " + std::to_string(c.a);
    if (c.b != c.a) out += " " + std::to_string(c.b);
    out += " 0\n";
  }
  return out;
}

}  // namespace asrel
