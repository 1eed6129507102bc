/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "paths.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "errors.hpp"

namespace asrel {

std::uint32_t AsGraph::degree_of(Asn v) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v) return 0;
  return degree[static_cast<std::size_t>(it - nodes.begin())];
}

int AsGraph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges.begin());
}

namespace {

// Parses one decimal ASN token; returns false on anything else. Zero is not
// a routable ASN and is rejected.
bool parse_asn(const char* s, std::size_t len, Asn& out) {
  if (len == 0 || len > 10) return false;
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v == 0 || v > 0xFFFFFFFFULL) return false;
  out = static_cast<Asn>(v);
  return true;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

PathSet parse_paths(const std::string& text) {
  PathSet ps;
  std::vector<AsPath> raw;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  std::unordered_set<Asn> seen;

  while (pos < n) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = n;
    std::size_t end = eol;
    ps.stats.lines++;

    // comment to end of line
    for (std::size_t i = pos; i < end; ++i) {
      if (text[i] == '#') {
        end = i;
        break;
      }
    }

    AsPath path;
    bool bad_token = false;
    std::size_t i = pos;
    while (i < end) {
      while (i < end && is_space(text[i])) ++i;
      if (i >= end) break;
      std::size_t j = i;
      while (j < end && !is_space(text[j])) ++j;
      Asn asn = 0;
      if (!parse_asn(text.data() + i, j - i, asn)) {
        bad_token = true;
        break;
      }
      // collapse prepending repeats
      if (path.empty() || path.back() != asn) path.push_back(asn);
      i = j;
    }
    pos = eol + 1;

    if (bad_token) {
      ps.stats.malformed++;
      continue;
    }
    if (path.empty()) continue;  // blank or comment-only line
    if (path.size() < 2) {
      ps.stats.too_short++;
      continue;
    }
    seen.clear();
    bool loop = false;
    for (Asn a : path) {
      if (!seen.insert(a).second) {
        loop = true;
        break;
      }
    }
    if (loop) {
      ps.stats.loops++;
      continue;
    }
    raw.push_back(std::move(path));
  }

  if (raw.empty()) throw ParseError("no usable paths in input");

  std::sort(raw.begin(), raw.end());
  const std::size_t before = raw.size();
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  ps.stats.duplicates = before - raw.size();
  ps.stats.kept = raw.size();
  ps.paths = std::move(raw);
  ps.graph = build_graph(ps.paths);
  ps.pairs = extract_pairs(ps.paths);
  return ps;
}

std::string serialize_paths(const PathSet& ps) {
  std::string out;
  for (const AsPath& p : ps.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

AsGraph build_graph(const std::vector<AsPath>& paths) {
  AsGraph g;
  std::set<Edge> edges;
  std::set<Asn> nodes;
  for (const AsPath& p : paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      nodes.insert(p[i]);
      if (i + 1 < p.size()) edges.insert(Edge(p[i], p[i + 1]));
    }
  }
  g.nodes.assign(nodes.begin(), nodes.end());
  g.edges.assign(edges.begin(), edges.end());
  g.degree.assign(g.nodes.size(), 0);
  for (const Edge& e : g.edges) {
    auto lo = std::lower_bound(g.nodes.begin(), g.nodes.end(), e.lo);
    auto hi = std::lower_bound(g.nodes.begin(), g.nodes.end(), e.hi);
    g.degree[static_cast<std::size_t>(lo - g.nodes.begin())]++;
    g.degree[static_cast<std::size_t>(hi - g.nodes.begin())]++;
  }
  return g;
}

std::vector<AdjacentPair> extract_pairs(const std::vector<AsPath>& paths) {
  std::set<AdjacentPair> pairs;
  for (const AsPath& p : paths) {
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
      pairs.insert(AdjacentPair(p[i], p[i + 1], p[i + 2]));
    }
  }
  return std::vector<AdjacentPair>(pairs.begin(), pairs.end());
}

}  // namespace asrel
