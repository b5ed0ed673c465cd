#include <algorithm>
#include <numeric>

#include "reopt/harness.hpp"

namespace reopt {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Clause random_clause(Rng& rng, std::size_t variables, std::size_t min_size, std::size_t max_size) {
  max_size = std::min(max_size, variables);
  min_size = std::min(min_size, max_size);
  std::size_t size = uniform(rng, min_size, max_size);
  std::vector<Var> vars(variables);
  std::iota(vars.begin(), vars.end(), Var{1});
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = uniform(rng, i, vars.size() - 1);
    std::swap(vars[i], vars[j]);
    lits.push_back({vars[i], coin(rng, 0.5)});
  }
  return Clause(std::move(lits));
}

CnfFormula random_cnf(Rng& rng, const CnfShape& shape) {
  CnfFormula f;
  for (Var v = 1; v <= shape.variables; ++v) f.declare(v);
  if (shape.variables == 0) return f;
  // Duplicates collapse; a bounded number of retries keeps small universes
  // from looping forever.
  for (std::size_t attempts = 0; f.size() < shape.clauses && attempts < 20 * shape.clauses + 20;
       ++attempts)
    f.add_clause(random_clause(rng, shape.variables, shape.min_clause_size, shape.max_clause_size));
  return f;
}

StripsInstance random_plansat(Rng& rng, std::size_t conditions, std::size_t operators) {
  StripsInstance inst;
  std::vector<Condition> names;
  for (std::size_t i = 0; i < conditions; ++i) names.push_back("p" + std::to_string(i));
  inst.conditions.insert(names.begin(), names.end());

  for (std::size_t i = 0; i < operators; ++i) {
    StripsOperator op;
    for (const auto& c : names) {
      if (coin(rng, 0.25))
        op.pos_pre.insert(c);
      else if (coin(rng, 0.15))
        op.neg_pre.insert(c);
      if (coin(rng, 0.3)) op.pos_post.insert(c);
    }
    inst.operators["op" + std::to_string(i)] = std::move(op);
  }
  for (const auto& c : names) {
    if (coin(rng, 0.3)) inst.initial.insert(c);
    if (coin(rng, 0.35))
      inst.goal.must_true.insert(c);
    else if (coin(rng, 0.1))
      inst.goal.must_false.insert(c);
  }
  return inst;
}

Graph random_graph(Rng& rng, std::size_t nodes, double edge_probability) {
  Graph g;
  for (std::size_t i = 0; i < nodes; ++i) g.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j)
      if (coin(rng, edge_probability)) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
  return g;
}

std::vector<CnfFormula> enumerate_small_formulas(std::size_t max_vars, std::size_t max_clauses,
                                                 std::size_t max_size) {
  std::vector<CnfFormula> out;
  for (std::size_t n = 0; n <= max_vars; ++n) {
    std::set<Clause> universe_set;
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
      std::vector<Var> vars;
      for (std::size_t i = 0; i < n; ++i)
        if ((subset >> i) & 1u) vars.push_back(Var(i + 1));
      if (vars.size() > max_size) continue;
      for (unsigned signs = 0; signs < (1u << vars.size()); ++signs) {
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < vars.size(); ++i) lits.push_back({vars[i], bool((signs >> i) & 1u)});
        universe_set.insert(Clause(std::move(lits)));
      }
    }
    const std::vector<Clause> universe(universe_set.begin(), universe_set.end());

    for (std::size_t count = 0; count <= max_clauses && count <= universe.size(); ++count) {
      std::vector<std::size_t> pick(count);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        CnfFormula f;
        for (Var v = 1; v <= n; ++v) f.declare(v);
        for (auto i : pick) f.add_clause(universe[i]);
        out.push_back(std::move(f));
        int i = int(count) - 1;
        while (i >= 0 && pick[i] == universe.size() - count + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (std::size_t j = i + 1; j < count; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

}  // namespace reopt
