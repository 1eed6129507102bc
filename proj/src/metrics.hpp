/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relmap.hpp"

namespace asrel {

// Valley-free check: a path may climb customer-to-provider links, cross
// sibling links at any point, and descend provider-to-customer links, but
// must never climb again after the first descent. Throws
// std::invalid_argument when a traversed link has no record in the map.
bool path_valid(const AsPath& path, const RelationshipMap& m);

struct ValidityReport {
  std::size_t total = 0;  // paths with at least two links
  std::size_t valid = 0;
  double fraction() const {
    return total == 0 ? 1.0 : static_cast<double>(valid) /
                                  static_cast<double>(total);
  }
};

// Valley-free fraction over every path with at least two links; shorter
// paths cannot violate policy and are not counted.
ValidityReport validity(const std::vector<AsPath>& paths,
                        const RelationshipMap& m);

std::string validity_json(const ValidityReport& r);

// Fraction of links labeled c2p by both maps that agree on the direction.
// Both maps must label the same set of links; sibling labels are compared
// for presence but do not enter the fraction. Returns 1 when no link is
// c2p in both maps.
double agreement(const RelationshipMap& x, const RelationshipMap& y);

// Number of distinct ASs reachable from each AS by walking only
// provider-to-customer steps, the AS itself excluded. Mutual reachability
// (provider cycles) is handled by contracting strongly connected
// components first.
struct ReachResult {
  std::vector<Asn> nodes;  // ascending; every endpoint in the map
  std::vector<std::uint64_t> reach;
};
ReachResult reachability(const RelationshipMap& m);

// Hierarchy levels from reach: level 0 holds the ASs with the largest
// reach, each following level the next smaller reach value. depth counts
// ASs strictly above, width the ASs sharing the level. Leaves are the ASs
// that reach nobody.
struct HierarchyRank {
  std::vector<Asn> asns;  // ascending
  std::vector<std::uint32_t> degree;
  std::vector<std::uint64_t> reach;
  std::vector<std::uint32_t> level;
  std::vector<std::uint64_t> depth;
  std::vector<std::uint64_t> width;
  std::vector<char> is_leaf;
};
HierarchyRank rank_hierarchy(const RelationshipMap& m);

// CSV with header asn,degree,reach,level,depth,width,is_leaf; rows ordered
// by level, then ASN. Byte-stable for equal maps.
std::string rank_csv(const HierarchyRank& r);

}  // namespace asrel
