/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "relmap.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"

namespace asrel {

RelationshipMap::RelationshipMap(std::vector<RelEdge> edges)
    : edges_(std::move(edges)) {
  for (const RelEdge& e : edges_) {
    if (e.a == 0 || e.b == 0 || e.a == e.b)
      throw std::invalid_argument("relationship endpoints must be distinct");
    if (e.rel == Rel::sibling && e.a > e.b)
      throw std::invalid_argument("sibling endpoints must be ascending");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const RelEdge& x, const RelEdge& y) { return x.key() < y.key(); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].key() == edges_[i - 1].key())
      throw std::invalid_argument("duplicate link in relationship map");
  }
}

int RelationshipMap::find(const Edge& e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const RelEdge& r, const Edge& k) { return r.key() < k; });
  if (it == edges_.end() || !(it->key() == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

const char* rel_str(Rel r) { return r == Rel::c2p ? "c2p" : "sibling"; }

const char* provenance_str(Provenance p) {
  switch (p) {
    case Provenance::sibling:
      return "sibling";
    case Provenance::fixed_by_stripping:
      return "fixed_by_stripping";
    case Provenance::rounded:
      return "rounded";
    case Provenance::gradient_default:
      return "gradient_default";
    case Provenance::truth:
      return "truth";
  }
  return "rounded";
}

namespace {

bool provenance_from(const std::string& s, Provenance& out) {
  if (s == "sibling") out = Provenance::sibling;
  else if (s == "fixed_by_stripping") out = Provenance::fixed_by_stripping;
  else if (s == "rounded") out = Provenance::rounded;
  else if (s == "gradient_default") out = Provenance::gradient_default;
  else if (s == "truth") out = Provenance::truth;
  else return false;
  return true;
}

}  // namespace

std::string relmap_to_json(const RelationshipMap& m) {
  nlohmann::ordered_json j;
  j["edges"] = nlohmann::ordered_json::array();
  for (const RelEdge& e : m.edges()) {
    nlohmann::ordered_json rec;
    rec["a"] = e.a;
    rec["b"] = e.b;
    rec["rel"] = rel_str(e.rel);
    rec["prov"] = provenance_str(e.prov);
    j["edges"].push_back(std::move(rec));
  }
  return j.dump(2) + "\n";
}

RelationshipMap relmap_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad relationship JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw ParseError("relationship JSON must be {\"edges\": [...]}");
  std::vector<RelEdge> edges;
  for (const auto& rec : j["edges"]) {
    if (!rec.is_object() || !rec.contains("a") || !rec.contains("b") ||
        !rec.contains("rel"))
      throw ParseError("edge records need a, b and rel");
    if (!rec["a"].is_number_unsigned() || !rec["b"].is_number_unsigned())
      throw ParseError("edge endpoints must be unsigned ASNs");
    const std::uint64_t a = rec["a"].get<std::uint64_t>();
    const std::uint64_t b = rec["b"].get<std::uint64_t>();
    if (a == 0 || b == 0 || a > 0xFFFFFFFFULL || b > 0xFFFFFFFFULL)
      throw ParseError("edge endpoints must be valid ASNs");
    RelEdge e;
    e.a = static_cast<Asn>(a);
    e.b = static_cast<Asn>(b);
    const std::string rel = rec["rel"].get<std::string>();
    if (rel == "c2p") e.rel = Rel::c2p;
    else if (rel == "sibling") e.rel = Rel::sibling;
    else throw ParseError("unknown rel tag: " + rel);
    if (rec.contains("prov")) {
      if (!rec["prov"].is_string() ||
          !provenance_from(rec["prov"].get<std::string>(), e.prov))
        throw ParseError("unknown prov tag");
    } else {
      e.prov = Provenance::rounded;
    }
    edges.push_back(e);
  }
  try {
    return RelationshipMap(std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace asrel
