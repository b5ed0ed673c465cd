#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"
#include "reopt/error.hpp"
#include "reopt/formats.hpp"
#include "reopt/gadget.hpp"
#include "reopt/harness.hpp"
#include "reopt/hint.hpp"
#include "reopt/plan_reductions.hpp"
#include "reopt/sat_reductions.hpp"

namespace reopt {

const std::vector<std::string>& experiment_problems() {
  static const std::vector<std::string> problems{"sat",    "sat-table", "fixed-sat", "unique-sat",
                                                 "vc",     "strips",    "plansat"};
  return problems;
}

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& field, const std::string& why) {
    throw Error(ErrorKind::InvalidConfig, field + ": " + why);
  };
  const auto& problems = experiment_problems();
  if (std::find(problems.begin(), problems.end(), problem) == problems.end())
    bad("problem", "unknown problem '" + problem + "'");
  const bool cnf_based = problem != "plansat";
  if (cnf_based && variables == 0) bad("variables", "must be at least 1");
  if (cnf_based && clauses == 0) bad("clauses", "must be at least 1");
  if (max_clause_size == 0) bad("max_clause_size", "must be at least 1");
  if (problem == "vc" && max_clause_size > 3)
    bad("max_clause_size", "vertex-cover gadgets accept clauses of at most 3 literals");
  if (problem == "plansat" && (conditions == 0 || conditions > 64))
    bad("conditions", "must be within 1..64");
  if (problem == "plansat" && operators == 0) bad("operators", "must be at least 1");
  if (problem == "sat-table" && (candidates == 0 || candidates > 16))
    bad("candidates", "must be within 1..16");
  if (problem == "sat-table" && bound > candidates) bad("bound", "exceeds the candidate count");
  if (verify && variables + 1 > oracle_limit) bad("variables", "exceed the oracle limit");
}

std::size_t ExperimentReport::hint_used_count() const {
  return std::size_t(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.hint_used; }));
}

double ExperimentReport::hint_success_rate() const {
  return rows.empty() ? 0.0 : double(hint_used_count()) / double(rows.size());
}

namespace {

std::string clause_id(const Clause& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(c.literals()[i].to_dimacs());
  }
  return out + "]";
}

std::string change_id(const ChangeSet& changes) {
  std::string out;
  for (const auto& c : changes.additions) out += (out.empty() ? "+" : " +") + clause_id(c);
  for (const auto& c : changes.deletions) out += (out.empty() ? "-" : " -") + clause_id(c);
  return out.empty() ? "none" : out;
}

class Trials {
 public:
  explicit Trials(const ExperimentConfig& config) : config_(config), rng_(config.seed) {}

  ExperimentReport run() {
    ExperimentReport report{config_.seed, config_.problem, {}};
    for (std::size_t t = 0; t < config_.trials; ++t) {
      ExperimentRow row = one(t);
      row.trial_id = t;
      row.problem = config_.problem;
      if (row.cold_verdict != row.hinted_verdict)
        throw Error(ErrorKind::Counterexample, "trial " + std::to_string(t) + " (seed " +
                                                   std::to_string(config_.seed) + ", change " +
                                                   row.change_id + "): cold and hinted verdicts differ");
      report.rows.push_back(std::move(row));
    }
    return report;
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  CnfFormula formula() {
    return random_cnf(rng_, {config_.variables, config_.clauses, 1, config_.max_clause_size});
  }

  // A formula with a model, by rejection.
  std::pair<CnfFormula, Assignment> satisfiable_formula() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      CnfFormula f = formula();
      if (auto model = solve_dpll(f)) return {std::move(f), std::move(*model)};
    }
    throw Error(ErrorKind::BudgetExceeded, "no satisfiable instance in 1000 draws");
  }

  void fail(std::size_t t, const std::string& what) {
    throw Error(ErrorKind::Counterexample, "trial " + std::to_string(t) + " (seed " +
                                               std::to_string(config_.seed) + "): " + what);
  }

  ExperimentRow sat_row(std::size_t t, const CnfFormula& f, const ChangeSet& changes,
                        const Assignment& hint) {
    ExperimentRow row;
    row.change_id = change_id(changes);
    const CnfFormula changed = apply_changes(f, changes);
    SolverStats cold;
    row.cold_verdict = solve_dpll(changed, &cold).has_value();
    row.cold_work = cold.work();
    const auto hinted = reuse_model(f, changes, hint);
    row.hinted_verdict = hinted.solution.has_value();
    row.hinted_work = hinted.work_units;
    row.hint_used = hinted.hint_used;
    if (hinted.solution && !evaluate(changed, *hinted.solution))
      fail(t, "hinted model does not satisfy the changed formula");
    if (config_.verify && solve_brute(changed, config_.oracle_limit).has_value() != row.cold_verdict)
      fail(t, "cold verdict differs from the oracle");
    return row;
  }

  ExperimentRow plan_row(std::size_t t, const StripsInstance& changed, const Plan& old_plan,
                         const std::string& id) {
    ExperimentRow row;
    row.change_id = id;
    PlanStats cold;
    row.cold_verdict = plan_exists(changed, &cold).has_value();
    row.cold_work = cold.states_expanded;
    const auto hinted = reuse_plan(changed, old_plan);
    row.hinted_verdict = hinted.solution.has_value();
    row.hinted_work = hinted.work_units;
    row.hint_used = hinted.hint_used;
    if (hinted.solution && !validate_plan(changed, *hinted.solution))
      fail(t, "hinted plan does not validate");
    return row;
  }

  ExperimentRow one(std::size_t t) {
    const auto& p = config_.problem;
    if (p == "sat") {
      auto [f, model] = satisfiable_formula();
      Clause extra;
      do extra = random_clause(rng_, config_.variables, 1, config_.max_clause_size);
      while (f.contains(extra) && f.size() < 1000);
      return sat_row(t, f, ChangeSet::add(extra), model);
    }
    if (p == "fixed-sat") {
      const auto fixed = reduce_fixed_model(formula());
      return sat_row(t, fixed.formula, ChangeSet::add(fixed.change_clause), fixed.hint_model);
    }
    if (p == "unique-sat") {
      const auto unique = reduce_unique_model(formula());
      auto model = solve_dpll(unique.formula);
      if (!model) fail(t, "unique-model formula has no model");
      return sat_row(t, unique.formula, unique.change(), *model);
    }
    if (p == "sat-table") return table_row(t);
    if (p == "vc") return vc_row(t);
    if (p == "strips") {
      const auto rc = sat_to_replanning(formula());
      return plan_row(t, apply_initial_change(rc), rc.original_plan, "-{a}");
    }
    return plansat_row(t);
  }

  ExperimentRow table_row(std::size_t t) {
    const CnfFormula base = formula();
    std::vector<ElementaryChange> candidates;
    std::set<Clause> used;
    const std::vector<Clause> existing(base.clauses().begin(), base.clauses().end());
    for (int attempt = 0; candidates.size() < config_.candidates && attempt < 1000; ++attempt) {
      if (!existing.empty() && pick(0, 2) == 0) {
        const Clause& c = existing[pick(0, existing.size() - 1)];
        if (used.insert(c).second) candidates.push_back({ElementaryChange::Kind::Delete, c});
      } else {
        Clause c = random_clause(rng_, config_.variables, 1, config_.max_clause_size);
        if (!base.contains(c) && used.insert(c).second)
          candidates.push_back({ElementaryChange::Kind::Add, c});
      }
    }
    const HintTable table = compile_table(base, candidates, config_.bound);
    CandidateMask mask = 0;
    for (std::size_t i = 0; i < table.candidates.size(); ++i)
      if (pick(0, 1)) mask |= 1u << i;
    const ChangeSet changes = changes_for(table.candidates, mask);
    const CnfFormula changed = apply_changes(base, changes);

    ExperimentRow row;
    row.change_id = change_id(changes);
    SolverStats cold;
    row.cold_verdict = solve_dpll(changed, &cold).has_value();
    row.cold_work = cold.work();
    const auto hit = lookup(table, changes);
    if (hit.hit) {
      row.hint_used = true;
      row.hinted_verdict = hit.solution.has_value();
      row.hinted_work = 1;
      if (hit.solution && !evaluate(changed, *hit.solution)) fail(t, "table entry is not a model");
    } else {
      SolverStats warm;
      row.hinted_verdict = solve_dpll(changed, &warm).has_value();
      row.hinted_work = warm.work();
    }
    return row;
  }

  ExperimentRow vc_row(std::size_t t) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const CnfFormula f = formula();
      const Gadget g = build_gadget(f);
      const auto cover = decide_cover(g.graph, g.budget);
      if (!cover) continue;

      std::vector<Literal> free_units;
      for (Var x : f.alphabet())
        for (Literal l : {pos(x), neg(x)})
          if (!f.contains(Clause{l})) free_units.push_back(l);
      if (free_units.empty()) continue;
      const Literal lit = free_units[pick(0, free_units.size() - 1)];
      const Gadget changed = gadget_add_unit(g, lit);
      std::set<Edge> added;
      for (const auto& e : changed.graph.edges())
        if (!g.graph.edges().count(e)) added.insert(e);

      ExperimentRow row;
      row.change_id = "+[" + std::to_string(lit.to_dimacs()) + "]";
      CoverStats cold;
      row.cold_verdict = decide_cover(changed.graph, changed.budget, &cold).has_value();
      row.cold_work = cold.nodes_explored;
      CoverStats warm;
      bool used = false;
      const auto hinted =
          warm_start_cover(changed.graph, *cover, added, changed.budget, &used, &warm);
      row.hinted_verdict = hinted.has_value();
      row.hint_used = used;
      row.hinted_work = changed.graph.edges().size() + warm.nodes_explored;
      if (hinted && (!is_cover(changed.graph, *hinted) || hinted->size() > changed.budget.k))
        fail(t, "warm-start cover is invalid");
      return row;
    }
    throw Error(ErrorKind::BudgetExceeded, "no satisfiable gadget in 1000 draws");
  }

  ExperimentRow plansat_row(std::size_t t) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const auto inst = random_plansat(rng_, config_.conditions, config_.operators);
      const auto plan = plan_exists(inst);
      if (!plan) continue;
      const std::vector<Condition> conds(inst.conditions.begin(), inst.conditions.end());
      const Condition c = conds[pick(0, conds.size() - 1)];
      InitialChange change;
      std::string id;
      if (inst.initial.count(c)) {
        change.remove = {c};
        id = "-{" + c + "}";
      } else {
        change.add = {c};
        id = "+{" + c + "}";
      }
      return plan_row(t, apply_initial_change(inst, change), *plan, id);
    }
    throw Error(ErrorKind::BudgetExceeded, "no solvable planning instance in 1000 draws");
  }

  const ExperimentConfig& config_;
  Rng rng_;
};

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  return Trials(config).run();
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "# seed=" << report.seed << " problem=" << report.problem << "\n";
  out << "trial_id,problem,change_id,cold_verdict,hinted_verdict,cold_work,hinted_work,hint_used\n";
  for (const auto& r : report.rows)
    out << r.trial_id << ',' << r.problem << ',' << r.change_id << ','
        << (r.cold_verdict ? "true" : "false") << ',' << (r.hinted_verdict ? "true" : "false")
        << ',' << r.cold_work << ',' << r.hinted_work << ',' << (r.hint_used ? "true" : "false")
        << '\n';
  return out.str();
}

std::string report_json(const ExperimentReport& report) {
  using nlohmann::json;
  json rows = json::array();
  std::uint64_t cold_total = 0, hinted_total = 0;
  for (const auto& r : report.rows) {
    rows.push_back({{"trial_id", r.trial_id},
                    {"problem", r.problem},
                    {"change_id", r.change_id},
                    {"cold_verdict", r.cold_verdict},
                    {"hinted_verdict", r.hinted_verdict},
                    {"cold_work", r.cold_work},
                    {"hinted_work", r.hinted_work},
                    {"hint_used", r.hint_used}});
    cold_total += r.cold_work;
    hinted_total += r.hinted_work;
  }
  json j = {{"seed", report.seed},
            {"problem", report.problem},
            {"rows", rows},
            {"summary",
             {{"trials", report.rows.size()},
              {"hint_used", report.hint_used_count()},
              {"hint_success_rate", report.hint_success_rate()},
              {"cold_work_total", cold_total},
              {"hinted_work_total", hinted_total}}}};
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> generate_instances(const ExperimentConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::vector<std::pair<std::string, std::string>> out;
  auto name = [](const std::string& stem, std::size_t i, const std::string& ext) {
    std::string index = std::to_string(i);
    return stem + "_" + std::string(index.size() < 3 ? 3 - index.size() : 0, '0') + index + ext;
  };
  const CnfShape shape{config.variables, config.clauses, 1, config.max_clause_size};
  for (std::size_t i = 0; i < config.trials; ++i) {
    if (config.problem == "vc") {
      out.emplace_back(name("gadget", i, ".json"), write_gadget_json(build_gadget(random_cnf(rng, shape))));
    } else if (config.problem == "plansat") {
      out.emplace_back(name("strips", i, ".json"),
                       write_instance_json(random_plansat(rng, config.conditions, config.operators)));
    } else if (config.problem == "strips") {
      out.emplace_back(name("replan", i, ".json"),
                       write_instance_json(sat_to_replanning(random_cnf(rng, shape)).instance));
    } else {
      out.emplace_back(name("sat", i, ".cnf"), write_dimacs(random_cnf(rng, shape)));
    }
  }
  return out;
}

}  // namespace reopt
