/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace asrel {

bool path_valid(const AsPath& path, const RelationshipMap& m) {
  bool descended = false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Asn x = path[i];
    const Asn y = path[i + 1];
    const int idx = m.find(Edge(x, y));
    if (idx < 0)
      throw std::invalid_argument("path uses a link the map does not label");
    const RelEdge& e = m.edges()[static_cast<std::size_t>(idx)];
    if (e.rel == Rel::sibling) continue;
    const bool uphill = (e.a == x);  // customer to provider
    if (uphill) {
      if (descended) return false;
    } else {
      descended = true;
    }
  }
  return true;
}

ValidityReport validity(const std::vector<AsPath>& paths,
                        const RelationshipMap& m) {
  ValidityReport r;
  for (const AsPath& p : paths) {
    if (p.size() < 3) continue;
    r.total++;
    if (path_valid(p, m)) r.valid++;
  }
  return r;
}

std::string validity_json(const ValidityReport& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["valid"] = r.valid;
  j["fraction"] = r.fraction();
  return j.dump(2) + "\n";
}

double agreement(const RelationshipMap& x, const RelationshipMap& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("maps label different link sets");
  std::size_t common = 0;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const RelEdge& ex = x.edges()[i];
    const RelEdge& ey = y.edges()[i];
    if (!(ex.key() == ey.key()))
      throw std::invalid_argument("maps label different link sets");
    if (ex.rel != Rel::c2p || ey.rel != Rel::c2p) continue;
    common++;
    if (ex.a == ey.a) equal++;
  }
  return common == 0 ? 1.0
                     : static_cast<double>(equal) /
                           static_cast<double>(common);
}

namespace {

// Iterative Tarjan decomposition of the provider-to-customer digraph;
// component ids come out in reverse topological order.
std::vector<int> scc(int n, const std::vector<std::vector<int>>& adj,
                     int& num_comps) {
  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), kUnvisited);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int counter = 0;
  num_comps = 0;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[static_cast<std::size_t>(root)] =
        lowlink[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.v;
      if (f.next < adj[static_cast<std::size_t>(v)].size()) {
        const int w = adj[static_cast<std::size_t>(v)][f.next++];
        if (index[static_cast<std::size_t>(w)] == kUnvisited) {
          index[static_cast<std::size_t>(w)] =
              lowlink[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          lowlink[static_cast<std::size_t>(v)] =
              std::min(lowlink[static_cast<std::size_t>(v)],
                       index[static_cast<std::size_t>(w)]);
        }
      } else {
        if (lowlink[static_cast<std::size_t>(v)] ==
            index[static_cast<std::size_t>(v)]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            comp[static_cast<std::size_t>(w)] = num_comps;
            if (w == v) break;
          }
          num_comps++;
        }
        frames.pop_back();
        if (!frames.empty())
          lowlink[static_cast<std::size_t>(frames.back().v)] =
              std::min(lowlink[static_cast<std::size_t>(frames.back().v)],
                       lowlink[static_cast<std::size_t>(v)]);
      }
    }
  }
  return comp;
}

}  // namespace

ReachResult reachability(const RelationshipMap& m) {
  ReachResult out;
  for (const RelEdge& e : m.edges()) {
    out.nodes.push_back(e.a);
    out.nodes.push_back(e.b);
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()),
                  out.nodes.end());
  const int n = static_cast<int>(out.nodes.size());
  const auto id_of = [&](Asn a) {
    return static_cast<int>(
        std::lower_bound(out.nodes.begin(), out.nodes.end(), a) -
        out.nodes.begin());
  };

  // provider -> customer arcs
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const RelEdge& e : m.edges()) {
    if (e.rel != Rel::c2p) continue;
    adj[static_cast<std::size_t>(id_of(e.b))].push_back(id_of(e.a));
  }

  int num_comps = 0;
  const std::vector<int> comp = scc(n, adj, num_comps);
  std::vector<std::uint64_t> comp_size(static_cast<std::size_t>(num_comps), 0);
  for (int v = 0; v < n; ++v)
    comp_size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]++;

  // descendant sets over the condensation as bitsets; component ids are
  // reverse-topological, so ascending order sees customers first
  const std::size_t words = (static_cast<std::size_t>(num_comps) + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(num_comps) * words,
                                  0);
  std::vector<std::vector<int>> carcs(static_cast<std::size_t>(num_comps));
  for (int v = 0; v < n; ++v)
    for (int w : adj[static_cast<std::size_t>(v)]) {
      const int cv = comp[static_cast<std::size_t>(v)];
      const int cw = comp[static_cast<std::size_t>(w)];
      if (cv != cw) carcs[static_cast<std::size_t>(cv)].push_back(cw);
    }
  std::vector<std::uint64_t> comp_reach(static_cast<std::size_t>(num_comps),
                                        0);
  for (int c = 0; c < num_comps; ++c) {
    auto* mine = &bits[static_cast<std::size_t>(c) * words];
    mine[static_cast<std::size_t>(c) / 64] |=
        1ULL << (static_cast<std::size_t>(c) % 64);
    for (int child : carcs[static_cast<std::size_t>(c)]) {
      const auto* theirs = &bits[static_cast<std::size_t>(child) * words];
      for (std::size_t w = 0; w < words; ++w) mine[w] |= theirs[w];
    }
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = mine[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        word &= word - 1;
        total += comp_size[w * 64 + static_cast<std::size_t>(bit)];
      }
    }
    comp_reach[static_cast<std::size_t>(c)] = total;
  }

  out.reach.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out.reach[static_cast<std::size_t>(v)] =
        comp_reach[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] -
        1;
  return out;
}

HierarchyRank rank_hierarchy(const RelationshipMap& m) {
  const ReachResult rr = reachability(m);
  const std::size_t n = rr.nodes.size();
  HierarchyRank r;
  r.asns = rr.nodes;
  r.reach = rr.reach;
  r.degree.assign(n, 0);
  for (const RelEdge& e : m.edges()) {
    const auto ia = std::lower_bound(r.asns.begin(), r.asns.end(), e.a);
    const auto ib = std::lower_bound(r.asns.begin(), r.asns.end(), e.b);
    r.degree[static_cast<std::size_t>(ia - r.asns.begin())]++;
    r.degree[static_cast<std::size_t>(ib - r.asns.begin())]++;
  }

  std::vector<std::uint64_t> distinct = rr.reach;
  std::sort(distinct.begin(), distinct.end(),
            std::greater<std::uint64_t>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<std::uint64_t> level_width(distinct.size(), 0);
  r.level.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(),
                                     rr.reach[i],
                                     std::greater<std::uint64_t>());
    const std::size_t lvl =
        static_cast<std::size_t>(it - distinct.begin());
    r.level[i] = static_cast<std::uint32_t>(lvl);
    level_width[lvl]++;
  }
  std::vector<std::uint64_t> above(distinct.size(), 0);
  for (std::size_t l = 1; l < distinct.size(); ++l)
    above[l] = above[l - 1] + level_width[l - 1];

  r.depth.assign(n, 0);
  r.width.assign(n, 0);
  r.is_leaf.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.depth[i] = above[r.level[i]];
    r.width[i] = level_width[r.level[i]];
    r.is_leaf[i] = rr.reach[i] == 0 ? 1 : 0;
  }
  return r;
}

std::string rank_csv(const HierarchyRank& r) {
  std::vector<std::size_t> order(r.asns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (r.level[x] != r.level[y]) return r.level[x] < r.level[y];
    return r.asns[x] < r.asns[y];
  });
  std::string out = "asn,degree,reach,level,depth,width,is_leaf\n";
  char buf[160];
  for (std::size_t i : order) {
    std::snprintf(buf, sizeof(buf), "%u,%u,%llu,%u,%llu,%llu,%d\n",
                  r.asns[i], r.degree[i],
                  static_cast<unsigned long long>(r.reach[i]), r.level[i],
                  static_cast<unsigned long long>(r.depth[i]),
                  static_cast<unsigned long long>(r.width[i]),
                  r.is_leaf[i] ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace asrel
