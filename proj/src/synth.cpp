/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "synth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rng.hpp"

namespace asrel {

namespace {

struct Plan {
  int k = 0;      // tier-1 size
  int n2 = 0;     // tier-2 size
  int n3 = 0;     // tier-3 size
  int r = 0;      // leaves reserved for policy violations
  int u_ded = 0;  // uplinks per reserved leaf
};

int uplinks_of(int index, int parents) {
  return std::min(index % 2 + 1, std::max(1, parents));
}

// Predicted degree bounds of the round-robin construction decide whether a
// tier split keeps the degree chain strict: every leaf degree below every
// adjacent tier-2 degree, every tier-2 degree below every tier-1 degree.
bool plan_is_strict(const Plan& p) {
  if (p.n3 - p.r < 1) return false;
  long slots = 0;
  for (int i = 0; i < p.n3 - p.r; ++i) slots += uplinks_of(i, p.n2);
  slots += static_cast<long>(p.r) * p.u_ded;
  long sum_u2 = 0;
  for (int i = 0; i < p.n2; ++i) sum_u2 += uplinks_of(i, p.k);
  const long min_ch2 = slots / p.n2;
  const long max_ch2 = (slots + p.n2 - 1) / p.n2;
  const long min_t2 = min_ch2 + 1;
  const long max_t2 = max_ch2 + std::min(2, p.k);
  const long max_t3 =
      std::max(static_cast<long>(p.r > 0 ? p.u_ded : 1),
               static_cast<long>((p.n3 - p.r >= 2 && p.n2 >= 2) ? 2 : 1));
  const long min_t1 = (p.k >= 3 ? 2 : 0) + sum_u2 / p.k;
  return min_t2 > max_t3 && min_t1 > max_t2;
}

Plan make_plan(const SynthParams& p, bool with_reserved) {
  Plan plan;
  plan.k = p.tier1 != 0 ? p.tier1
                        : (p.ases < 60 ? 1 : std::max(3, p.ases / 40));
  for (int n2 = 2; n2 <= p.ases - plan.k - 1; ++n2) {
    plan.n2 = n2;
    plan.n3 = p.ases - plan.k - n2;
    if (!with_reserved) {
      plan.r = 0;
      plan.u_ded = 0;
      if (plan_is_strict(plan)) return plan;
      continue;
    }
    plan.r = std::clamp(plan.n3 / 25, 2, 12);
    for (int u = std::min(4, n2); u >= 2; --u) {
      plan.u_ded = u;
      if (plan_is_strict(plan)) return plan;
    }
  }
  throw std::invalid_argument(
      "ases too small for a strict three-tier hierarchy with this tier-1 "
      "size");
}

}  // namespace

SynthResult gen_synth(const SynthParams& p) {
  if (p.ases < 12) throw std::invalid_argument("ases must be at least 12");
  if (p.paths < 1) throw std::invalid_argument("paths must be at least 1");
  if (!(p.corrupt >= 0.0 && p.corrupt < 1.0))
    throw std::invalid_argument("corrupt must lie in [0,1)");
  if (p.tier1 == 2)
    throw std::invalid_argument("tier1 must be 1 or at least 3");
  if (p.tier1 < 0 || p.tier1 > p.ases / 4)
    throw std::invalid_argument("tier1 out of range");

  const Plan plan = make_plan(p, p.corrupt > 0.0);
  const int n = p.ases;

  // distinct ASNs in random order; index < k is tier 1, the next n2 are
  // tier 2, the rest leaves; the last r leaves are reserved for violations
  SplitMix64 asn_rng(derive_seed(p.seed, "asn", 0));
  std::set<Asn> drawn;
  while (static_cast<int>(drawn.size()) < n)
    drawn.insert(static_cast<Asn>(
        asn_rng.next_below(static_cast<std::uint64_t>(n) * 10) + 1));
  std::vector<Asn> asn(drawn.begin(), drawn.end());
  for (std::size_t i = asn.size(); i > 1; --i)
    std::swap(asn[i - 1], asn[asn_rng.next_below(i)]);

  std::vector<std::vector<int>> providers(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> customers(static_cast<std::size_t>(n));
  const auto link = [&](int child, int parent) {
    providers[static_cast<std::size_t>(child)].push_back(parent);
    customers[static_cast<std::size_t>(parent)].push_back(child);
  };

  // provider cycle across the top clique
  if (plan.k >= 3)
    for (int i = 0; i < plan.k; ++i) link(i, (i + 1) % plan.k);

  // uplinks of a tier: nodes are visited in shuffled order, each taking its
  // quota of consecutive slots; slot j wires to parent j mod #parents, so
  // parent loads differ by at most one and one node's parents are distinct
  SplitMix64 wire_rng(derive_seed(p.seed, "wire", 0));
  long slot = 0;
  const auto wire = [&](int first, int count, int parent_first,
                        int parent_count, int fixed_uplinks) {
    std::vector<int> order(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) order[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[wire_rng.next_below(i)]);
    for (int idx : order) {
      const int u =
          fixed_uplinks > 0 ? fixed_uplinks : uplinks_of(idx, parent_count);
      for (int t = 0; t < u; ++t) {
        link(first + idx,
             parent_first + static_cast<int>(slot % parent_count));
        ++slot;
      }
    }
  };
  wire(plan.k, plan.n2, 0, plan.k, 0);
  slot = 0;
  const int first_reserved = n - plan.r;
  wire(plan.k + plan.n2, plan.n3 - plan.r, plan.k, plan.n2, 0);
  wire(first_reserved, plan.r, plan.k, plan.n2, plan.u_ded);

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    degree[static_cast<std::size_t>(v)] =
        static_cast<int>(providers[static_cast<std::size_t>(v)].size() +
                         customers[static_cast<std::size_t>(v)].size());
  for (int child = plan.k; child < n; ++child)
    for (int parent : providers[static_cast<std::size_t>(child)])
      if (degree[static_cast<std::size_t>(child)] >=
          degree[static_cast<std::size_t>(parent)])
        throw std::logic_error("hierarchy degree chain is not strict");

  std::vector<RelEdge> truth_edges;
  for (int child = 0; child < n; ++child)
    for (int parent : providers[static_cast<std::size_t>(child)]) {
      RelEdge e;
      e.a = asn[static_cast<std::size_t>(child)];
      e.b = asn[static_cast<std::size_t>(parent)];
      e.rel = Rel::c2p;
      e.prov = Provenance::truth;
      truth_edges.push_back(e);
    }

  const auto reserved = [&](int v) { return v >= first_reserved; };
  const auto ring_next = [&](int v) { return (v + 1) % plan.k; };
  const auto ring_prev = [&](int v) { return (v + plan.k - 1) % plan.k; };

  std::string text;
  std::set<Edge> covered;
  std::vector<int> seq;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  const auto emit = [&](const std::vector<int>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) text += ' ';
      text += std::to_string(asn[static_cast<std::size_t>(nodes[i])]);
      if (i)
        covered.insert(Edge(asn[static_cast<std::size_t>(nodes[i - 1])],
                            asn[static_cast<std::size_t>(nodes[i])]));
    }
    text += '\n';
  };

  // clean paths climb, optionally cross one top-cycle link, then descend;
  // reserved leaves stay out so their links never enter an adjacent pair
  for (int t = 0; t < p.paths; ++t) {
    SplitMix64 rng(derive_seed(p.seed, "path",
                               static_cast<std::uint64_t>(t)));
    seq.clear();
    std::fill(visited.begin(), visited.end(), 0);
    int cur;
    do {
      cur = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    } while (reserved(cur));
    seq.push_back(cur);
    visited[static_cast<std::size_t>(cur)] = 1;
    bool used_ring = false;

    while (true) {  // climb
      std::vector<std::pair<int, bool>> cand;  // (node, via ring link)
      // a top node's only providers are ring links, handled below so a
      // path crosses at most one of them
      if (cur >= plan.k)
        for (int pr : providers[static_cast<std::size_t>(cur)])
          if (!visited[static_cast<std::size_t>(pr)])
            cand.push_back({pr, false});
      if (plan.k >= 3 && cur < plan.k && !used_ring &&
          !visited[static_cast<std::size_t>(ring_next(cur))])
        cand.push_back({ring_next(cur), true});
      if (cand.empty()) break;
      if (seq.size() > 1 && rng.next_double() >= 0.7) break;
      const auto pick = cand[rng.next_below(cand.size())];
      cur = pick.first;
      if (pick.second) used_ring = true;
      seq.push_back(cur);
      visited[static_cast<std::size_t>(cur)] = 1;
    }

    while (true) {  // descend
      std::vector<std::pair<int, bool>> cand;
      for (int cu : customers[static_cast<std::size_t>(cur)])
        if (!visited[static_cast<std::size_t>(cu)] && !reserved(cu) &&
            !(plan.k >= 3 && cur < plan.k && cu == ring_prev(cur)))
          cand.push_back({cu, false});
      if (plan.k >= 3 && cur < plan.k && !used_ring &&
          !visited[static_cast<std::size_t>(ring_prev(cur))])
        cand.push_back({ring_prev(cur), true});
      if (cand.empty()) break;
      if (seq.size() > 1 && rng.next_double() >= 0.75) break;
      const auto pick = cand[rng.next_below(cand.size())];
      cur = pick.first;
      if (pick.second) used_ring = true;
      seq.push_back(cur);
      visited[static_cast<std::size_t>(cur)] = 1;
    }

    if (seq.size() >= 2) emit(seq);
  }

  // every link appears in at least one path so the path-derived graph and
  // its degrees match the hierarchy exactly; reserved-leaf links arrive as
  // two-AS paths, which carry no adjacent pair
  for (int child = 0; child < n; ++child)
    for (int parent : providers[static_cast<std::size_t>(child)]) {
      const Edge e(asn[static_cast<std::size_t>(child)],
                   asn[static_cast<std::size_t>(parent)]);
      if (!covered.count(e)) emit({child, parent});
    }

  // policy violations: descend into a reserved leaf and climb straight
  // back out. The valley is the only conflict these links appear in, so a
  // validity-driven run can re-label them and recover the paths, while the
  // degree gradient alone cannot.
  std::size_t corrupted = 0;
  const std::size_t want = static_cast<std::size_t>(
      p.corrupt * static_cast<double>(p.paths));
  for (std::size_t c = 0; c < want && plan.r > 0; ++c) {
    SplitMix64 rng(derive_seed(p.seed, "corrupt", c));
    const int v =
        first_reserved + static_cast<int>(rng.next_below(
                             static_cast<std::uint64_t>(plan.r)));
    const auto& pr = providers[static_cast<std::size_t>(v)];
    const std::size_t i = rng.next_below(pr.size());
    std::size_t j = rng.next_below(pr.size() - 1);
    if (j >= i) ++j;
    emit({pr[i], v, pr[j]});
    corrupted++;
  }

  SynthResult out;
  out.paths_text = std::move(text);
  out.truth = RelationshipMap(std::move(truth_edges));
  for (int i = 0; i < plan.k; ++i)
    out.tier1.push_back(asn[static_cast<std::size_t>(i)]);
  std::sort(out.tier1.begin(), out.tier1.end());
  out.corrupted = corrupted;
  return out;
}

}  // namespace asrel
