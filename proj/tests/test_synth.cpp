/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "metrics.hpp"
#include "paths.hpp"
#include "synth.hpp"

using namespace asrel;

namespace {

SynthParams small_params() {
  SynthParams p;
  p.seed = 7;
  p.ases = 60;
  p.paths = 500;
  return p;
}

}  // namespace

TEST_CASE("clean fixtures are fully valley-free against their own truth") {
  for (const std::uint64_t seed : {1ULL, 7ULL, 11ULL}) {
    SynthParams p = small_params();
    p.seed = seed;
    const SynthResult s = gen_synth(p);
    CHECK(s.corrupted == 0);
    const PathSet ps = parse_paths(s.paths_text);
    CHECK(ps.stats.malformed == 0);
    const ValidityReport r = validity(ps.paths, s.truth);
    CHECK(r.total > 0);
    CHECK(r.fraction() == 1.0);
  }
}

TEST_CASE("every uplink climbs to a strictly better connected provider") {
  const SynthResult s = gen_synth(small_params());
  const PathSet ps = parse_paths(s.paths_text);
  const AsGraph& g = ps.graph;
  const std::set<Asn> top(s.tier1.begin(), s.tier1.end());
  for (const RelEdge& e : s.truth.edges()) {
    REQUIRE(e.rel == Rel::c2p);
    // top-clique peering links are the one exception to the strict chain
    if (top.count(e.a) && top.count(e.b)) continue;
    CHECK(g.degree_of(e.a) < g.degree_of(e.b));
  }
}

TEST_CASE("the graph in the path file matches the truth map exactly") {
  SynthParams p = small_params();
  p.seed = 3;
  const SynthResult s = gen_synth(p);
  const PathSet ps = parse_paths(s.paths_text);
  const AsGraph& g = ps.graph;
  CHECK(g.nodes.size() == static_cast<std::size_t>(p.ases));
  CHECK(g.edges.size() == s.truth.size());
  for (const Edge& e : g.edges) CHECK(s.truth.find(e) >= 0);
}

TEST_CASE("ranking the truth map puts exactly the top clique on level 0") {
  SynthParams p;
  p.seed = 5;
  p.ases = 200;
  p.paths = 4000;
  const SynthResult s = gen_synth(p);
  const HierarchyRank r = rank_hierarchy(s.truth);
  std::vector<Asn> level0;
  for (std::size_t i = 0; i < r.asns.size(); ++i)
    if (r.level[i] == 0) level0.push_back(r.asns[i]);
  CHECK(level0 == s.tier1);
  CHECK(s.tier1.size() >= 3);
  CHECK(std::is_sorted(s.tier1.begin(), s.tier1.end()));
}

TEST_CASE("requested tier-1 size is honored") {
  SynthParams p = small_params();
  p.tier1 = 4;
  const SynthResult s = gen_synth(p);
  CHECK(s.tier1.size() == 4);
}

TEST_CASE("corrupt fraction adds exactly the advertised number of lines") {
  SynthParams p = small_params();
  p.corrupt = 0.05;
  const SynthResult noisy = gen_synth(p);
  CHECK(noisy.corrupted ==
        static_cast<std::size_t>(p.corrupt * p.paths));  // floor
  const PathSet ps = parse_paths(noisy.paths_text);
  const ValidityReport r = validity(ps.paths, noisy.truth);
  // the extra lines really violate policy; repeats may collapse, so the
  // distinct invalid paths are bounded by the emitted count
  CHECK(r.valid < r.total);
  CHECK(r.total - r.valid <= noisy.corrupted);
}

TEST_CASE("generation is a pure function of its parameters") {
  const SynthResult a = gen_synth(small_params());
  const SynthResult b = gen_synth(small_params());
  CHECK(a.paths_text == b.paths_text);
  CHECK(relmap_to_json(a.truth) == relmap_to_json(b.truth));
  CHECK(a.tier1 == b.tier1);

  SynthParams other = small_params();
  other.seed = 8;
  const SynthResult c = gen_synth(other);
  CHECK(a.paths_text != c.paths_text);
}

TEST_CASE("parameter validation") {
  SynthParams p = small_params();
  SUBCASE("too few ases") {
    p.ases = 11;
    CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
  }
  SUBCASE("corrupt out of range") {
    p.corrupt = 1.0;
    CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
    p.corrupt = -0.1;
    CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
  }
  SUBCASE("two top providers cannot form a cycle") {
    p.tier1 = 2;
    CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
  }
  SUBCASE("no paths requested") {
    p.paths = 0;
    CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
  }
}
