#include "reopt/hint.hpp"

#include <bit>

#include "reopt/error.hpp"

namespace reopt {

ChangeSet changes_for(const std::vector<ElementaryChange>& candidates, CandidateMask mask) {
  ChangeSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    const auto& c = candidates[i];
    (c.kind == ElementaryChange::Kind::Add ? out.additions : out.deletions).push_back(c.clause);
  }
  return out;
}

namespace {

std::size_t subsets_up_to(std::size_t n, std::size_t k) {
  std::size_t total = 0, binom = 1;
  for (std::size_t i = 0; i <= k && i <= n; ++i) {
    total += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k, std::size_t from, CandidateMask mask,
                     auto&& fn) {
  fn(mask);
  if (std::size_t(std::popcount(mask)) == k) return;
  for (std::size_t i = from; i < n; ++i) for_each_subset(n, k, i + 1, mask | (1u << i), fn);
}

// Literal checks until the first failing clause.
bool check_model(const CnfFormula& f, const Assignment& a, std::uint64_t& work) {
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (const auto& lit : clause.literals()) {
      ++work;
      if (a.satisfies(lit)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

HintTable compile_table(const CnfFormula& base, std::vector<ElementaryChange> candidates,
                        std::size_t bound, const CompileOptions& options) {
  if (candidates.size() > 32)
    throw Error(ErrorKind::BudgetExceeded, "more than 32 candidate changes");
  std::set<Clause> seen;
  for (const auto& c : candidates)
    if (!seen.insert(c.clause).second)
      throw Error(ErrorKind::InvalidChangeSet, "clause " + to_string(c.clause) +
                                                   " appears more than once among candidates");
  const std::size_t count = subsets_up_to(candidates.size(), bound);
  if (count > options.budget)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " table entries exceed budget " +
                                               std::to_string(options.budget));

  HintTable table{base, std::move(candidates), bound, {}};
  for_each_subset(table.candidates.size(), bound, 0, 0, [&](CandidateMask mask) {
    CnfFormula changed = apply_changes(base, changes_for(table.candidates, mask));
    auto model = solve_dpll(changed);
    if (options.verify) {
      bool oracle = solve_brute(changed).has_value();
      if (oracle != model.has_value() || (model && !evaluate(changed, *model)))
        throw Error(ErrorKind::InvalidInstance, "solver and oracle disagree on table entry " +
                                                    std::to_string(mask));
    }
    table.entries.emplace(mask, std::move(model));
  });
  return table;
}

LookupResult lookup(const HintTable& table, const ChangeSet& changes) {
  CandidateMask mask = 0;
  auto locate = [&](const Clause& clause, ElementaryChange::Kind kind) {
    for (std::size_t i = 0; i < table.candidates.size(); ++i)
      if (table.candidates[i].kind == kind && table.candidates[i].clause == clause) {
        mask |= 1u << i;
        return true;
      }
    return false;
  };
  for (const auto& c : changes.additions)
    if (!locate(c, ElementaryChange::Kind::Add)) return {};
  for (const auto& c : changes.deletions)
    if (!locate(c, ElementaryChange::Kind::Delete)) return {};
  if (std::size_t(std::popcount(mask)) > table.bound) return {};
  auto it = table.entries.find(mask);
  if (it == table.entries.end()) return {};
  return {true, it->second};
}

ReuseOutcome<Assignment> reuse_model(const CnfFormula& f, const ChangeSet& changes,
                                     const Assignment& hint) {
  ReuseOutcome<Assignment> out;
  if (!check_model(f, hint, out.work_units))
    throw Error(ErrorKind::InvalidHint, "hint " + to_string(hint) + " is not a model");
  out.work_units = 0;

  CnfFormula changed = apply_changes(f, changes);
  if (check_model(changed, hint, out.work_units)) {
    out.solution = hint;
    out.hint_used = true;
    return out;
  }
  SolverStats stats;
  out.solution = solve_dpll(changed, &stats);
  out.work_units += stats.work();
  return out;
}

ReuseOutcome<Plan> reuse_plan(const StripsInstance& changed, const Plan& old_plan) {
  ReuseOutcome<Plan> out;
  PlanStats stats;
  for (std::size_t skip = 0; skip <= old_plan.steps.size(); ++skip) {
    Plan suffix{{old_plan.steps.begin() + std::ptrdiff_t(skip), old_plan.steps.end()}};
    bool ok = false;
    try {
      ok = validate_plan(changed, suffix, &stats);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownOperator) throw;
    }
    if (ok) {
      out.solution = std::move(suffix);
      out.hint_used = true;
      out.work_units = stats.condition_checks;
      return out;
    }
  }
  out.solution = plan_exists(changed, &stats);
  out.work_units = stats.condition_checks + stats.states_expanded;
  return out;
}

}  // namespace reopt
