/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "paths.hpp"

namespace asrel {

struct OrgTable {
  std::map<Asn, std::string> org;  // ASN -> raw organization name
  std::size_t duplicates = 0;      // records replaced by a later line
  std::size_t malformed = 0;       // lines without "ASN<TAB>name"
};

// Parses "ASN<TAB>OrgName" lines; '#' starts a comment when it opens the
// line. On a repeated ASN the later record wins. Throws ParseError when the
// text contains no usable record at all but is non-empty garbage; an empty
// table from empty text is allowed.
OrgTable parse_orgs(const std::string& text);

// Uppercases ASCII letters, maps every non-alphanumeric byte to a space and
// collapses whitespace runs. Idempotent.
std::string normalize_org_name(const std::string& name);

// Two names belong to the same organization when, after normalization,
// (a) they are equal,
// (b) they are equal once a trailing digit run is removed from each side
//     that has one (both remnants non-empty), or
// (c) their first tokens are equal, purely alphabetic, at least four
//     characters long and not a corporate stop word.
bool same_org(const std::string& a, const std::string& b);

// Graph links whose endpoints both carry org records that same_org accepts.
std::vector<Edge> infer_siblings(const OrgTable& orgs, const AsGraph& graph);

}  // namespace asrel
