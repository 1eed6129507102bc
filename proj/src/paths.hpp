/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace asrel {

using Asn = std::uint32_t;

// Undirected link between two ASs, stored with the smaller ASN first.
struct Edge {
  Asn lo = 0;
  Asn hi = 0;
  Edge() = default;
  Edge(Asn a, Asn b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Two consecutive links of some path sharing the middle AS. Identity is the
// unordered pair of links: the outer endpoints are normalized so that a < c,
// which makes a pair and its reverse traversal the same object.
struct AdjacentPair {
  Asn a = 0;
  Asn mid = 0;
  Asn c = 0;
  AdjacentPair() = default;
  AdjacentPair(Asn u, Asn v, Asn w)
      : a(u < w ? u : w), mid(v), c(u < w ? w : u) {}
  Edge left() const { return Edge(a, mid); }
  Edge right() const { return Edge(mid, c); }
  friend auto operator<=>(const AdjacentPair&, const AdjacentPair&) = default;
};

using AsPath = std::vector<Asn>;

struct AsGraph {
  std::vector<Asn> nodes;             // ascending
  std::vector<Edge> edges;            // ascending, distinct
  std::vector<std::uint32_t> degree;  // parallel to nodes; incident edges

  std::uint32_t degree_of(Asn v) const;
  // Index into edges, or -1 when absent.
  int edge_index(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_index(e) >= 0; }
};

struct ParseStats {
  std::size_t lines = 0;      // physical lines read
  std::size_t kept = 0;       // distinct usable paths
  std::size_t duplicates = 0; // usable lines dropped as repeats
  std::size_t loops = 0;      // lines with a non-consecutive repeated ASN
  std::size_t malformed = 0;  // lines with an unparsable token
  std::size_t too_short = 0;  // lines with fewer than two ASs after collapse
};

struct PathSet {
  std::vector<AsPath> paths;        // ascending lexicographic, distinct
  AsGraph graph;
  std::vector<AdjacentPair> pairs;  // ascending, distinct
  ParseStats stats;
};

// Parses the line-oriented path format: whitespace-separated decimal ASNs,
// one path per line, '#' starts a comment. Consecutive repeats of an ASN
// (prepending) collapse to one hop; a line with a non-consecutive repeat is
// dropped as a loop. Paths of two ASs contribute links and degrees but no
// adjacent pairs. Throws ParseError when no usable path remains.
PathSet parse_paths(const std::string& text);

// Canonical text form: one path per line in ascending lexicographic order.
// parse_paths(serialize_paths(ps)) reproduces paths, graph and pairs.
std::string serialize_paths(const PathSet& ps);

// Nodes, distinct links and per-node link counts of a path collection.
// Degrees count incident links, not path traversals.
AsGraph build_graph(const std::vector<AsPath>& paths);

// Distinct adjacent link pairs of a path collection.
std::vector<AdjacentPair> extract_pairs(const std::vector<AsPath>& paths);

}  // namespace asrel
