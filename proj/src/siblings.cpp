/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "siblings.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "errors.hpp"

namespace asrel {

namespace {

const std::array<std::string, 7> kStopWords = {
    "THE", "NET", "COM", "INC", "LTD", "GMBH", "CORP"};

bool is_stop_word(const std::string& token) {
  return std::find(kStopWords.begin(), kStopWords.end(), token) !=
         kStopWords.end();
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Removes one trailing digit run (and the space before it) if present.
std::string drop_trailing_digits(const std::string& s) {
  std::size_t end = s.size();
  while (end > 0 && s[end - 1] >= '0' && s[end - 1] <= '9') --end;
  if (end == s.size()) return s;
  return rstrip(s.substr(0, end));
}

std::string first_token(const std::string& s) {
  const std::size_t sp = s.find(' ');
  return sp == std::string::npos ? s : s.substr(0, sp);
}

bool all_alpha(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < 'A' || c > 'Z') return false;
  }
  return true;
}

}  // namespace

OrgTable parse_orgs(const std::string& text) {
  OrgTable t;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  bool saw_content = false;
  while (pos < n) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = n;
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    saw_content = true;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      t.malformed++;
      continue;
    }
    const std::string asn_str = line.substr(0, tab);
    std::string name = line.substr(tab + 1);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    std::size_t lead = 0;
    while (lead < name.size() && (name[lead] == ' ' || name[lead] == '\t'))
      ++lead;
    name = name.substr(lead);

    std::uint64_t v = 0;
    bool ok = !asn_str.empty() && asn_str.size() <= 10;
    for (char c : asn_str) {
      if (c < '0' || c > '9') {
        ok = false;
        break;
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (!ok || v == 0 || v > 0xFFFFFFFFULL || name.empty()) {
      t.malformed++;
      continue;
    }
    const Asn asn = static_cast<Asn>(v);
    if (!t.org.emplace(asn, name).second) {
      t.org[asn] = name;
      t.duplicates++;
    }
  }
  if (saw_content && t.org.empty())
    throw ParseError("org table contains no usable record");
  return t;
}

std::string normalize_org_name(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  bool pending_space = false;
  for (char c : name) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::toupper(u));
    } else {
      pending_space = true;
    }
  }
  return out;
}

bool same_org(const std::string& a, const std::string& b) {
  const std::string na = normalize_org_name(a);
  const std::string nb = normalize_org_name(b);
  if (na.empty() || nb.empty()) return false;
  if (na == nb) return true;

  const std::string da = drop_trailing_digits(na);
  const std::string db = drop_trailing_digits(nb);
  if (!da.empty() && da == db) return true;

  const std::string ta = first_token(na);
  const std::string tb = first_token(nb);
  if (ta == tb && ta.size() >= 4 && all_alpha(ta) && !is_stop_word(ta))
    return true;
  return false;
}

std::vector<Edge> infer_siblings(const OrgTable& orgs, const AsGraph& graph) {
  std::vector<Edge> out;
  for (const Edge& e : graph.edges) {
    auto lo = orgs.org.find(e.lo);
    auto hi = orgs.org.find(e.hi);
    if (lo == orgs.org.end() || hi == orgs.org.end()) continue;
    if (same_org(lo->second, hi->second)) out.push_back(e);
  }
  return out;
}

}  // namespace asrel
