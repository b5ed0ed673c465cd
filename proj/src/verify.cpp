#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>

#include "reopt/error.hpp"
#include "reopt/formats.hpp"
#include "reopt/gadget.hpp"
#include "reopt/harness.hpp"
#include "reopt/hint.hpp"
#include "reopt/plan_reductions.hpp"
#include "reopt/sat_reductions.hpp"

namespace reopt {

namespace {

constexpr std::size_t kMaxRecorded = 20;

std::string describe(const CnfFormula& f) {
  return to_string(f) + " over " + std::to_string(f.alphabet().size()) + " variables";
}

// Runs one named sweep, turning library errors inside a case into
// counterexamples.
class Sweep {
 public:
  explicit Sweep(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  void run_case(const std::string& label, const std::function<void()>& body) {
    ++report_.cases;
    try {
      body();
    } catch (const Error& e) {
      fail(label + ": " + e.what());
    }
  }

  void expect(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }

  void fail(const std::string& message) {
    ++failures_;
    if (report_.counterexamples.size() < kMaxRecorded) report_.counterexamples.push_back(message);
  }

  VerifyReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (failures_ > report_.counterexamples.size())
      report_.counterexamples.push_back("... " + std::to_string(failures_) + " failures in total");
    return report_;
  }

 private:
  VerifyReport report_;
  std::size_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

bool sat_of(const CnfFormula& f, std::size_t limit) { return solve_brute(f, limit).has_value(); }

std::size_t offset_budget(std::size_t k, long offset) { return std::size_t(long(k) + offset); }

void check_gadget_contracts(Sweep& sweep, const CnfFormula& f, const VerifyOptions& opts) {
  sweep.run_case(describe(f), [&] {
    const Gadget g = build_gadget(f);
    const bool sat = sat_of(f, opts.oracle_limit);
    const auto k = offset_budget(g.budget.k, opts.gadget_budget_offset);
    const auto best = min_cover_brute(g.graph).size;
    sweep.expect(sat == (best <= k), "gadget of " + describe(f) + ": sat=" + std::to_string(sat) +
                                         " min cover " + std::to_string(best) + " budget " +
                                         std::to_string(k));

    for (Var x : f.alphabet()) {
      for (Literal lit : {pos(x), neg(x)}) {
        const bool present = f.contains(Clause{lit});
        CnfFormula changed = f;
        Gadget mutated;
        if (present) {
          changed.remove_clause(Clause{lit});
          mutated = gadget_remove_unit(g, lit);
        } else {
          changed.add_clause(Clause{lit});
          mutated = gadget_add_unit(g, lit);
        }
        const bool changed_sat = sat_of(changed, opts.oracle_limit);
        const auto mk = offset_budget(mutated.budget.k, opts.gadget_budget_offset);
        const auto mbest = min_cover_brute(mutated.graph).size;
        sweep.expect(changed_sat == (mbest <= mk),
                     std::string(present ? "remove" : "add") + " unit " + to_string(lit) + " on " +
                         describe(f) + ": sat=" + std::to_string(changed_sat) + " min cover " +
                         std::to_string(mbest) + " budget " + std::to_string(mk));
      }
    }
  });
}

}  // namespace

VerifyReport verify_gadget_example(const VerifyOptions& opts) {
  Sweep sweep("gadget-example");
  sweep.run_case("x1 v x2, ~x1", [&] {
    const CnfFormula f{Clause{pos(1), pos(2)}, Clause{neg(1)}};
    const Gadget g = build_gadget(f);
    const auto k = offset_budget(g.budget.k, opts.gadget_budget_offset);
    const auto best = min_cover_brute(g.graph);
    sweep.expect(g.graph.nodes().size() == 14,
                 "expected 14 nodes, got " + std::to_string(g.graph.nodes().size()));
    sweep.expect(k == 3, "expected k = 3, got " + std::to_string(k));
    sweep.expect(best.size == 3, "expected min cover 3, got " + std::to_string(best.size));
  });
  return sweep.finish();
}

VerifyReport verify_gadget_sweep(const VerifyOptions& opts) {
  Sweep sweep("gadget-sweep");
  for (const auto& f : enumerate_small_formulas(3, 3)) check_gadget_contracts(sweep, f, opts);
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.random_gadget_formulas; ++i) {
    CnfShape shape{4, std::uniform_int_distribution<std::size_t>(1, 4)(rng), 1, 3};
    check_gadget_contracts(sweep, random_cnf(rng, shape), opts);
  }
  return sweep.finish();
}

VerifyReport verify_sat_reductions(const VerifyOptions& opts) {
  Sweep sweep("sat-reductions");
  for (const auto& g : enumerate_small_formulas(3, 3)) {
    sweep.run_case(describe(g), [&] {
      const bool sat = sat_of(g, opts.oracle_limit);

      const auto fixed = reduce_fixed_model(g);
      sweep.expect(!g.alphabet().count(fixed.fresh), "fixed-model fresh variable collides");
      sweep.expect(evaluate(fixed.formula, fixed.hint_model),
                   "fixed-model hint is not a model for " + describe(g));
      CnfFormula fixed_changed = apply_changes(fixed.formula, ChangeSet::add(fixed.change_clause));
      sweep.expect(sat_of(fixed_changed, opts.oracle_limit) == sat,
                   "fixed-model verdict differs for " + describe(g));

      const auto unique = reduce_unique_model(g);
      sweep.expect(!g.alphabet().count(unique.fresh), "unique-model fresh variable collides");
      const auto models = count_models(unique.formula, opts.oracle_limit);
      sweep.expect(models == 1, "unique-model formula has " + std::to_string(models) +
                                    " models for " + describe(g));
      std::set<Var> expected = g.alphabet();
      expected.insert(unique.fresh);
      auto model = solve_brute(unique.formula, opts.oracle_limit);
      sweep.expect(model && model->true_vars() == expected,
                   "unique model is not {a} ∪ X for " + describe(g));
      CnfFormula unique_changed = apply_changes(unique.formula, unique.change());
      sweep.expect(sat_of(unique_changed, opts.oracle_limit) == sat,
                   "unique-model verdict differs for " + describe(g));
    });
  }
  return sweep.finish();
}

VerifyReport verify_replanning(const VerifyOptions& opts) {
  Sweep sweep("replanning");
  for (const auto& f : enumerate_small_formulas(3, 3)) {
    sweep.run_case(describe(f), [&] {
      const auto rc = sat_to_replanning(f);
      sweep.expect(validate_plan(rc.instance, rc.original_plan),
                   "<e> does not validate for " + describe(f));
      const auto irredundant = count_irredundant_plans(rc.instance);
      sweep.expect(irredundant == 1, std::to_string(irredundant) + " irredundant plans for " +
                                         describe(f));
      const auto changed = apply_initial_change(rc);
      const auto plan = plan_exists(changed);
      const bool sat = sat_of(f, opts.oracle_limit);
      sweep.expect(plan.has_value() == sat, "plan existence " + std::to_string(plan.has_value()) +
                                                " but sat " + std::to_string(sat) + " for " +
                                                describe(f));
      if (plan)
        sweep.expect(validate_plan(changed, *plan), "returned plan " + to_string(*plan) +
                                                        " does not validate for " + describe(f));
    });
  }
  return sweep.finish();
}

VerifyReport verify_goal_compilation(const VerifyOptions& opts) {
  Sweep sweep("goal-compilation");
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.random_plansat_instances; ++i) {
    const auto nc = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto no = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto inst = random_plansat(rng, nc, no);
    sweep.run_case("instance " + std::to_string(i), [&] {
      const auto compiled = goal_compilation(inst);
      const auto original_plan = plan_exists(inst);
      const auto compiled_plan = plan_exists(compiled.instance);
      sweep.expect(original_plan.has_value() == compiled_plan.has_value(),
                   "plan existence differs after goal compilation:\n" + write_instance_json(inst));
      if (compiled_plan)
        sweep.expect(validate_plan(compiled.instance, *compiled_plan),
                     "compiled plan does not validate");

      const std::vector<Condition> conds(inst.conditions.begin(), inst.conditions.end());
      const auto& o = compiled.instance.operators.at(compiled.goal_operator);
      for (unsigned mask = 0; mask < (1u << conds.size()); ++mask) {
        State s;
        for (std::size_t b = 0; b < conds.size(); ++b)
          if ((mask >> b) & 1u) s.insert(conds[b]);
        if (is_applicable(s, o) != goal_satisfied(s, inst.goal)) {
          sweep.fail("goal operator applicability differs from goal test in instance " +
                     std::to_string(i));
          break;
        }
      }
    });
  }
  return sweep.finish();
}

namespace {

HintTable random_hint_table(Rng& rng, std::size_t& candidate_count, std::size_t& bound) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t vars = pick(2, 4);
  const CnfFormula base = random_cnf(rng, {vars, pick(1, 5), 1, 3});
  candidate_count = pick(1, 4);
  bound = pick(0, 2);

  std::vector<ElementaryChange> candidates;
  std::set<Clause> used;
  const std::vector<Clause> existing(base.clauses().begin(), base.clauses().end());
  for (std::size_t attempts = 0; candidates.size() < candidate_count && attempts < 100; ++attempts) {
    if (!existing.empty() && pick(0, 2) == 0) {
      const Clause& c = existing[pick(0, existing.size() - 1)];
      if (used.insert(c).second) candidates.push_back({ElementaryChange::Kind::Delete, c});
    } else {
      Clause c = random_clause(rng, vars, 1, 3);
      if (!base.contains(c) && used.insert(c).second)
        candidates.push_back({ElementaryChange::Kind::Add, c});
    }
  }
  candidate_count = candidates.size();
  return compile_table(base, std::move(candidates), bound);
}

}  // namespace

VerifyReport verify_hint_tables(const VerifyOptions& opts) {
  Sweep sweep("hint-tables");
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.hint_configurations; ++i) {
    sweep.run_case("configuration " + std::to_string(i), [&] {
      std::size_t count = 0, bound = 0;
      const HintTable table = random_hint_table(rng, count, bound);
      for (CandidateMask mask = 0; mask < (1u << count); ++mask) {
        const ChangeSet changes = changes_for(table.candidates, mask);
        const auto result = lookup(table, changes);
        if (std::size_t(std::popcount(mask)) > bound) {
          sweep.expect(!result.hit, "lookup beyond the bound must miss");
          continue;
        }
        const CnfFormula changed = apply_changes(table.base, changes);
        const bool oracle = sat_of(changed, opts.oracle_limit);
        sweep.expect(result.hit, "registered subset " + std::to_string(mask) + " missed");
        sweep.expect(result.solution.has_value() == oracle,
                     "table verdict differs from oracle on " + describe(changed));
        if (result.solution)
          sweep.expect(evaluate(changed, *result.solution),
                       "stored assignment does not satisfy " + describe(changed));
      }
    });
  }
  return sweep.finish();
}

VerifyReport verify_solver_crosscheck(const VerifyOptions& opts) {
  Sweep sweep("solver-crosscheck");
  auto check = [&](const CnfFormula& f) {
    sweep.run_case(describe(f), [&] {
      const auto brute = solve_brute(f, opts.oracle_limit);
      const auto dpll = solve_dpll(f);
      sweep.expect(brute.has_value() == dpll.has_value(), "solvers disagree on " + describe(f));
      if (dpll) sweep.expect(evaluate(f, *dpll), "DPLL model fails " + describe(f));
      if (brute) sweep.expect(evaluate(f, *brute), "oracle model fails " + describe(f));
    });
  };
  for (const auto& f : enumerate_small_formulas(3, 3)) check(f);
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.random_solver_formulas; ++i) {
    const auto vars = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto clauses = std::uniform_int_distribution<std::size_t>(0, 3 * vars)(rng);
    check(random_cnf(rng, {vars, clauses, 1, 3}));
  }
  return sweep.finish();
}

VerifyReport verify_round_trips(const VerifyOptions& opts) {
  Sweep sweep("round-trips");
  Rng rng(opts.seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto both_ways = [&](const std::string& label, const auto& value, auto write, auto parse) {
    sweep.run_case(label, [&] {
      const std::string text = write(value);
      const auto back = parse(text);
      sweep.expect(back == value, label + ": parse(write(x)) != x");
      sweep.expect(write(back) == text, label + ": write(parse(text)) != text");
    });
  };

  for (std::size_t i = 0; i < opts.round_trip_artifacts; ++i) {
    const auto vars = pick(1, 6);
    both_ways("dimacs " + std::to_string(i), random_cnf(rng, {vars, pick(0, 8), 1, 3}),
              write_dimacs, parse_dimacs);
  }
  for (std::size_t i = 0; i < opts.round_trip_artifacts; ++i)
    both_ways("edge-list " + std::to_string(i), random_graph(rng, pick(0, 10), 0.3),
              write_edge_list, parse_edge_list);
  for (std::size_t i = 0; i < opts.round_trip_artifacts; ++i)
    both_ways("instance " + std::to_string(i), random_plansat(rng, pick(0, 6), pick(0, 6)),
              write_instance_json, parse_instance_json);
  for (std::size_t i = 0; i < opts.round_trip_artifacts; ++i) {
    std::size_t count = 0, bound = 0;
    both_ways("hint-table " + std::to_string(i), random_hint_table(rng, count, bound),
              write_hint_table, parse_hint_table);
  }
  return sweep.finish();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"sat-reductions", "vc-gadget", "plan-reductions",
                                              "hint-tables",    "solvers",   "formats",
                                              "all"};
  return names;
}

std::vector<VerifyReport> verify_suite(const std::string& suite, const VerifyOptions& opts) {
  const bool all = suite == "all";
  if (std::find(verify_suite_names().begin(), verify_suite_names().end(), suite) ==
      verify_suite_names().end())
    throw Error(ErrorKind::InvalidConfig, "unknown suite '" + suite + "'");
  std::vector<VerifyReport> out;
  if (all || suite == "sat-reductions") out.push_back(verify_sat_reductions(opts));
  if (all || suite == "vc-gadget") {
    out.push_back(verify_gadget_example(opts));
    out.push_back(verify_gadget_sweep(opts));
  }
  if (all || suite == "plan-reductions") {
    out.push_back(verify_replanning(opts));
    out.push_back(verify_goal_compilation(opts));
  }
  if (all || suite == "hint-tables") out.push_back(verify_hint_tables(opts));
  if (all || suite == "solvers") out.push_back(verify_solver_crosscheck(opts));
  if (all || suite == "formats") out.push_back(verify_round_trips(opts));
  return out;
}

}  // namespace reopt
