/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>
#include <vector>

#include "paths.hpp"

namespace asrel {

enum class Rel { c2p, sibling };

// How a label came to be:
//   sibling            same organization on both ends
//   fixed_by_stripping direction forced during non-conflict removal
//   rounded            decided by the relaxation and hyperplane rounding
//   gradient_default   link appears in no adjacent pair; degree gradient
//   truth              ground truth of a synthetic hierarchy
enum class Provenance {
  sibling,
  fixed_by_stripping,
  rounded,
  gradient_default,
  truth
};

struct RelEdge {
  Asn a = 0;  // customer for c2p; smaller ASN for sibling
  Asn b = 0;  // provider for c2p; larger ASN for sibling
  Rel rel = Rel::c2p;
  Provenance prov = Provenance::rounded;

  Edge key() const { return Edge(a, b); }
};

// One record per link, addressable by the undirected link.
class RelationshipMap {
 public:
  RelationshipMap() = default;
  // Sorts by link; throws std::invalid_argument on duplicate links or a
  // sibling record whose endpoints are not ascending.
  explicit RelationshipMap(std::vector<RelEdge> edges);

  const std::vector<RelEdge>& edges() const { return edges_; }
  // Index into edges(), or -1 when the link carries no record.
  int find(const Edge& e) const;
  std::size_t size() const { return edges_.size(); }

 private:
  std::vector<RelEdge> edges_;  // ascending by key()
};

const char* rel_str(Rel r);
const char* provenance_str(Provenance p);

// {"edges":[{"a":...,"b":...,"rel":"c2p","prov":"rounded"},...]} with
// records ascending by link; serialization is byte-stable.
std::string relmap_to_json(const RelationshipMap& m);

// Inverse of relmap_to_json. "prov" is optional and defaults to "rounded".
// Throws ParseError on malformed JSON, unknown tags or duplicate links.
RelationshipMap relmap_from_json(const std::string& text);

}  // namespace asrel
