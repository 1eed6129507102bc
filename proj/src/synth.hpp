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

struct SynthParams {
  std::uint64_t seed = 1;
  int ases = 200;          // >= 12
  int paths = 10000;       // >= 1
  double corrupt = 0.0;    // [0,1); extra policy-violating paths
  int tier1 = 0;           // 0 = automatic; 1 or >= 3 (a 2-clique cannot form
                           // a provider cycle on distinct links)
};

struct SynthResult {
  std::string paths_text;   // path file content
  RelationshipMap truth;    // every link labeled c2p with prov "truth"
  std::vector<Asn> tier1;   // ascending
  std::size_t corrupted = 0;
};

// Generates a three-tier provider hierarchy: a top clique wired as a
// provider cycle, a middle tier multi-homed into the top, and leaves
// multi-homed into the middle. Tier sizes are chosen so that along every
// uplink the customer has a strictly smaller degree than the provider.
// Paths walk customer-to-provider links up, optionally cross one top-cycle
// link, and walk provider-to-customer links down; every link is covered by
// at least one path. corrupt adds floor(corrupt * paths) extra paths that
// descend into a leaf and climb straight back out. Those valleys are staged
// on a few reserved multi-homed leaves that clean paths avoid, so each
// violation is decoupled from the clean structure: re-labeling the leaf's
// links recovers the corrupt paths without invalidating any clean path.
SynthResult gen_synth(const SynthParams& p);

}  // namespace asrel
