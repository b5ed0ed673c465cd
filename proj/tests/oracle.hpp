#pragma once

// Reference implementations used only by tests. They are written from the
// definitions, share no code with the library solvers, and favor obviousness
// over speed.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reopt/cnf.hpp"
#include "reopt/strips.hpp"
#include "reopt/vc.hpp"

namespace oracle {

// Truth table row `bits` over the sorted alphabet: bit i is variable i.
inline bool row_satisfies(const reopt::CnfFormula& f, const std::vector<reopt::Var>& vars,
                          std::uint64_t bits) {
  std::map<reopt::Var, bool> value;
  for (std::size_t i = 0; i < vars.size(); ++i) value[vars[i]] = (bits >> i) & 1u;
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (const auto& lit : clause.literals()) {
      auto it = value.find(lit.var);
      bool v = it != value.end() && it->second;
      if (v == lit.positive) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

inline std::vector<reopt::Var> variables(const reopt::CnfFormula& f) {
  std::set<reopt::Var> vars = f.alphabet();
  for (const auto& c : f.clauses())
    for (const auto& l : c.literals()) vars.insert(l.var);
  return {vars.begin(), vars.end()};
}

inline std::uint64_t model_count(const reopt::CnfFormula& f) {
  auto vars = variables(f);
  std::uint64_t n = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits)
    n += row_satisfies(f, vars, bits);
  return n;
}

inline bool sat(const reopt::CnfFormula& f) {
  auto vars = variables(f);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits)
    if (row_satisfies(f, vars, bits)) return true;
  return false;
}

inline std::set<std::set<reopt::Var>> models(const reopt::CnfFormula& f) {
  auto vars = variables(f);
  std::set<std::set<reopt::Var>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
    if (!row_satisfies(f, vars, bits)) continue;
    std::set<reopt::Var> m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if ((bits >> i) & 1u) m.insert(vars[i]);
    out.insert(m);
  }
  return out;
}

// Minimum vertex cover by trying every node subset (bitmask order).
inline std::size_t min_cover(const reopt::Graph& g) {
  std::vector<std::string> nodes;
  for (const auto& n : g.nodes())
    if (g.degree(n) > 0) nodes.push_back(n);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::uint64_t> adj(nodes.size(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[index[u]] |= std::uint64_t{1} << index[v];
    adj[index[v]] |= std::uint64_t{1} << index[u];
  }
  // A set is a cover iff every node left out has all its neighbours inside.
  std::size_t best = nodes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nodes.size()); ++mask) {
    auto size = std::size_t(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < nodes.size() && ok; ++u)
      if (!((mask >> u) & 1u) && (adj[u] & ~mask)) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Plan existence by depth-first reachability over explicit state sets.
inline bool plan_exists(const reopt::StripsInstance& inst) {
  auto goal = [&](const reopt::State& s) {
    for (const auto& c : inst.goal.must_true)
      if (!s.count(c)) return false;
    for (const auto& c : inst.goal.must_false)
      if (s.count(c)) return false;
    return true;
  };
  std::set<reopt::State> seen{inst.initial};
  std::vector<reopt::State> stack{inst.initial};
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    if (goal(s)) return true;
    for (const auto& [name, op] : inst.operators) {
      bool ok = true;
      for (const auto& c : op.pos_pre) ok = ok && s.count(c);
      for (const auto& c : op.neg_pre) ok = ok && !s.count(c);
      if (!ok) continue;
      auto next = s;
      next.insert(op.pos_post.begin(), op.pos_post.end());
      for (const auto& c : op.neg_post) next.erase(c);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

inline bool plan_valid(const reopt::StripsInstance& inst, const std::vector<std::string>& steps) {
  reopt::State s = inst.initial;
  for (const auto& name : steps) {
    const auto& op = inst.operators.at(name);
    for (const auto& c : op.pos_pre)
      if (!s.count(c)) return false;
    for (const auto& c : op.neg_pre)
      if (s.count(c)) return false;
    s.insert(op.pos_post.begin(), op.pos_post.end());
    for (const auto& c : op.neg_post) s.erase(c);
  }
  for (const auto& c : inst.goal.must_true)
    if (!s.count(c)) return false;
  for (const auto& c : inst.goal.must_false)
    if (s.count(c)) return false;
  return true;
}

// Irredundant plans by enumerating every operator sequence up to max_len.
inline std::uint64_t irredundant_plans(const reopt::StripsInstance& inst, std::size_t max_len) {
  std::vector<std::string> names;
  for (const auto& [name, op] : inst.operators) names.push_back(name);
  std::uint64_t count = 0;
  std::vector<std::string> seq;
  auto irredundant = [&](const std::vector<std::string>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto q = p;
      q.erase(q.begin() + long(i));
      if (plan_valid(inst, q)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (plan_valid(inst, seq) && irredundant(seq)) ++count;
    if (seq.size() == max_len) return;
    for (const auto& n : names) {
      seq.push_back(n);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return count;
}

}  // namespace oracle
