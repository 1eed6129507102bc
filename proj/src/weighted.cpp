/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "weighted.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace asrel {

std::size_t WeightedInstance::num_binary() const {
  std::size_t n = 0;
  for (const WClause& c : clauses)
    if (c.a != c.b) ++n;
  return n;
}

std::size_t WeightedInstance::num_unary() const {
  return clauses.size() - num_binary();
}

double WeightedInstance::total_weight() const {
  double s = 0.0;
  for (const WClause& c : clauses) s += c.w;
  return s;
}

double gradient_f(std::uint32_t d_minus, std::uint32_t d_plus) {
  if (d_minus == 0 || d_plus == 0)
    throw std::invalid_argument("gradient_f: degrees must be positive");
  if (d_minus > d_plus)
    throw std::invalid_argument("gradient_f: d_minus must not exceed d_plus");
  const double sum = static_cast<double>(d_minus) + static_cast<double>(d_plus);
  const double diff =
      static_cast<double>(d_plus) - static_cast<double>(d_minus);
  return diff / sum * std::log(sum);
}

WeightedInstance build_weighted(const ClauseSet& conflicts,
                                const std::vector<DegreePair>& degrees,
                                double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  const int n = conflicts.num_vars;
  if (degrees.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("degrees must cover every variable");

  WeightedInstance inst;
  inst.num_vars = n;
  inst.alpha = alpha;

  const std::size_t m2 = conflicts.clauses.size();
  for (const Clause& c : conflicts.clauses) {
    const int va = c.a > 0 ? c.a : -c.a;
    const int vb = c.b > 0 ? c.b : -c.b;
    if (va < 1 || va > n || vb < 1 || vb > n)
      throw std::invalid_argument("clause literal out of range");
    if (va == vb)
      throw std::invalid_argument("conflict clauses must span two links");
  }

  if (m2 > 0) {
    inst.c2 = 1.0 / static_cast<double>(m2);
    const double w2 = alpha * inst.c2;
    for (const Clause& c : conflicts.clauses)
      inst.clauses.push_back({c.a, c.b, w2});
  } else {
    inst.missing_binary = true;
  }

  double f_sum = 0.0;
  std::vector<double> f(static_cast<std::size_t>(n) + 1, 0.0);
  for (int v = 1; v <= n; ++v) {
    const DegreePair& d = degrees[static_cast<std::size_t>(v)];
    f[static_cast<std::size_t>(v)] = gradient_f(d.d_minus, d.d_plus);
    f_sum += f[static_cast<std::size_t>(v)];
  }
  if (n > 0 && f_sum > 0.0) {
    inst.c1 = 1.0 / f_sum;
    for (int v = 1; v <= n; ++v)
      inst.clauses.push_back(
          {v, v, (1.0 - alpha) * inst.c1 * f[static_cast<std::size_t>(v)]});
  } else if (n > 0) {
    inst.skipped_unary = true;
  }
  return inst;
}

double objective_value(const WeightedInstance& inst,
                       const std::vector<char>& values) {
  if (values.size() != static_cast<std::size_t>(inst.num_vars) + 1)
    throw std::invalid_argument("assignment must cover every variable");
  const auto sat = [&](int lit) {
    return lit > 0 ? values[static_cast<std::size_t>(lit)] != 0
                   : values[static_cast<std::size_t>(-lit)] == 0;
  };
  double total = 0.0;
  for (const WClause& c : inst.clauses)
    if (sat(c.a) || sat(c.b)) total += c.w;
  return total;
}

Assignment brute_force_opt(const WeightedInstance& inst) {
  const int n = inst.num_vars;
  if (n > 20)
    throw std::invalid_argument("brute_force_opt: more than 20 variables");
  Assignment best;
  best.values.assign(static_cast<std::size_t>(n) + 1, 0);
  best.objective = -1.0;
  std::vector<char> values(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    // variable 1 is the highest bit so mask order is lexicographic order
    // of the value vector; keeping strict improvement yields the smallest
    for (int v = 1; v <= n; ++v)
      values[static_cast<std::size_t>(v)] =
          (mask >> (n - v)) & 1ULL ? 1 : 0;
    const double obj = objective_value(inst, values);
    if (obj > best.objective) {
      best.objective = obj;
      best.values = values;
    }
  }
  if (best.objective < 0.0) best.objective = 0.0;
  return best;
}

std::string to_wdimacs(const WeightedInstance& inst) {
  std::string out = "c weighted 2sat instance\n";
  out += "p wcnf " + std::to_string(inst.num_vars) + " " +
         std::to_string(inst.clauses.size()) + "\n";
  char buf[64];
  for (const WClause& c : inst.clauses) {
    std::snprintf(buf, sizeof(buf), "%.17g", c.w);
    out += buf;
    out += " " + std::to_string(c.a);
    if (c.b != c.a) out += " " + std::to_string(c.b);
    out += " 0\n";
  }
  return out;
}

WeightedInstance parse_wdimacs(const std::string& text) {
  WeightedInstance inst;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      long vars = 0, clauses = 0;
      if (!(ls >> kind >> vars >> clauses) || kind != "wcnf" || vars < 0 ||
          clauses < 0)
        throw ParseError("bad wcnf header");
      if (have_header) throw ParseError("duplicate wcnf header");
      have_header = true;
      inst.num_vars = static_cast<int>(vars);
      expected = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError("clause before wcnf header");
    double w = 0.0;
    try {
      w = std::stod(first);
    } catch (const std::exception&) {
      throw ParseError("bad clause weight: " + first);
    }
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ParseError("clause weight must be finite and non-negative");
    std::vector<int> lits;
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) break;
      const int v = lit > 0 ? lit : -lit;
      if (v < 1 || v > inst.num_vars)
        throw ParseError("literal out of range: " + std::to_string(lit));
      lits.push_back(lit);
    }
    if (lit != 0) throw ParseError("clause not terminated by 0");
    if (lits.empty() || lits.size() > 2)
      throw ParseError("clauses must have one or two literals");
    if (lits.size() == 1) lits.push_back(lits[0]);
    inst.clauses.push_back({lits[0], lits[1], w});
  }
  if (!have_header) throw ParseError("missing wcnf header");
  if (inst.clauses.size() != expected)
    throw ParseError("clause count does not match header");
  return inst;
}

}  // namespace asrel
