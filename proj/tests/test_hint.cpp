#include <gtest/gtest.h>

#include "oracle.hpp"
#include "reopt/error.hpp"
#include "reopt/harness.hpp"
#include "reopt/hint.hpp"
#include "reopt/plan_reductions.hpp"
#include "reopt/sat_reductions.hpp"

using namespace reopt;

namespace {

ElementaryChange add(Clause c) { return {ElementaryChange::Kind::Add, std::move(c)}; }
ElementaryChange del(Clause c) { return {ElementaryChange::Kind::Delete, std::move(c)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parse;
}

}  // namespace

TEST(CompileTable, SingleCandidate) {
  auto t = compile_table(CnfFormula{{pos(1)}}, {add(Clause{neg(1)})}, 1);
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries.at(0), Assignment{1});
  EXPECT_FALSE(t.entries.at(1).has_value());
}

TEST(CompileTable, BoundZeroHoldsOnlyBase) {
  auto t = compile_table(CnfFormula{{pos(1)}}, {add(Clause{neg(1)}), add(Clause{pos(2)})}, 0);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_TRUE(t.entries.count(0));
}

TEST(CompileTable, FullSubsetUnsat) {
  CnfFormula base({1}, {});
  auto t = compile_table(base, {add(Clause{pos(1)}), add(Clause{neg(1)})}, 2);
  ASSERT_EQ(t.entries.size(), 4u);
  for (CandidateMask m = 0; m < 4; ++m)
    EXPECT_EQ(t.entries.at(m).has_value(), oracle::sat(apply_changes(base, changes_for(t.candidates, m))));
  EXPECT_FALSE(t.entries.at(3).has_value());
}

TEST(CompileTable, Errors) {
  std::vector<ElementaryChange> many;
  for (Var v = 1; v <= 20; ++v) many.push_back(add(Clause{pos(v)}));
  EXPECT_EQ(kind_of([&] { compile_table(CnfFormula{}, many, 20, {1000}); }), ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([&] { compile_table(CnfFormula{}, {add(Clause{pos(1)}), del(Clause{pos(1)})}, 1); }),
            ErrorKind::InvalidChangeSet);
}

TEST(CompileTable, EntriesMatchOracle) {
  Rng rng(31);
  for (int cfg = 0; cfg < 60; ++cfg) {
    auto base = random_cnf(rng, {4, 5, 1, 3});
    std::vector<ElementaryChange> cands;
    std::set<Clause> used;
    while (cands.size() < 1 + std::size_t(cfg % 4)) {
      bool deletion = !base.empty() && rng() % 3 == 0;
      Clause c = deletion ? *std::next(base.clauses().begin(), long(rng() % base.size()))
                          : random_clause(rng, 4, 1, 3);
      if (!used.insert(c).second) continue;
      cands.push_back({deletion ? ElementaryChange::Kind::Delete : ElementaryChange::Kind::Add, c});
    }
    std::size_t bound = std::min<std::size_t>(cands.size(), cfg % 3);
    auto t = compile_table(base, cands, bound, {kDefaultTableBudget, true});
    for (const auto& [mask, entry] : t.entries) {
      ASSERT_LE(std::size_t(__builtin_popcount(mask)), bound);
      auto changed = apply_changes(base, changes_for(cands, mask));
      ASSERT_EQ(entry.has_value(), oracle::sat(changed));
      if (entry) { ASSERT_TRUE(evaluate(changed, *entry)); }
      auto hit = lookup(t, changes_for(cands, mask));
      ASSERT_TRUE(hit.hit);
      ASSERT_EQ(hit.solution, entry);
    }
  }
}

TEST(Lookup, HitsAndMisses) {
  auto t = compile_table(CnfFormula{{pos(1)}, {pos(2)}},
                         {add(Clause{neg(1)}), del(Clause{pos(2)}), add(Clause{pos(3)})}, 2);
  auto hit = lookup(t, ChangeSet{{Clause{pos(3)}}, {Clause{pos(2)}}});
  EXPECT_TRUE(hit.hit);
  EXPECT_EQ(hit.solution, t.entries.at(0b110));
  EXPECT_FALSE(lookup(t, ChangeSet::add(Clause{pos(4)})).hit);
  EXPECT_FALSE(lookup(t, ChangeSet::remove(Clause{neg(1)})).hit);  // registered as an addition
  EXPECT_FALSE(lookup(t, ChangeSet{{Clause{neg(1)}, Clause{pos(3)}}, {Clause{pos(2)}}}).hit);
  EXPECT_TRUE(lookup(t, ChangeSet{}).hit);
}

TEST(ReuseModel, FixedModelHintFails) {
  for (const auto& g : {CnfFormula{{pos(1)}}, CnfFormula{{pos(1)}, {neg(1)}}}) {
    auto r = reduce_fixed_model(g);
    auto out = reuse_model(r.formula, ChangeSet::add(r.change_clause), r.hint_model);
    EXPECT_FALSE(out.hint_used);
    EXPECT_EQ(out.solution.has_value(), oracle::sat(g));
  }
}

TEST(ReuseModel, FastPathWhenHintSatisfiesNewClause) {
  CnfFormula f{{pos(1), pos(2)}, {neg(3)}};
  ChangeSet change = ChangeSet::add(Clause{pos(1), pos(3)});
  auto out = reuse_model(f, change, Assignment{1});
  EXPECT_TRUE(out.hint_used);
  EXPECT_EQ(out.solution, Assignment{1});
  auto changed = apply_changes(f, change);
  EXPECT_LE(out.work_units, changed.literal_occurrences());
}

TEST(ReuseModel, UniqueModelHintNeverHelps) {
  for (const auto& g : enumerate_small_formulas(2, 2)) {
    auto r = reduce_unique_model(g);
    auto hint = *solve_brute(r.formula);
    auto out = reuse_model(r.formula, r.change(), hint);
    ASSERT_FALSE(out.hint_used);
    ASSERT_EQ(out.solution.has_value(), oracle::sat(g));
  }
}

TEST(ReuseModel, InvalidHint) {
  EXPECT_EQ(kind_of([] { reuse_model(CnfFormula{{pos(1)}}, {}, Assignment{}); }), ErrorKind::InvalidHint);
}

TEST(ReuseModel, AgreesWithColdSolving) {
  Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    auto f = random_cnf(rng, {4, 4, 1, 3});
    auto hint = solve_dpll(f);
    if (!hint) continue;
    ChangeSet change = ChangeSet::add(random_clause(rng, 4, 1, 3));
    if (i % 3 == 0 && !f.empty()) change.deletions.push_back(*f.clauses().begin());
    if (i % 3 == 0 && change.deletions[0] == change.additions[0]) continue;
    auto out = reuse_model(f, change, *hint);
    auto changed = apply_changes(f, change);
    ASSERT_EQ(out.solution.has_value(), bool(solve_dpll(changed)));
    if (out.solution) { ASSERT_TRUE(evaluate(changed, *out.solution)); }
    if (out.hint_used) {
      ASSERT_EQ(out.solution, hint);
      ASSERT_LE(out.work_units, changed.literal_occurrences());
    }
  }
}

TEST(ReusePlan, UnaffectedChangeKeepsPlan) {
  auto c = sat_to_replanning(CnfFormula{{pos(1)}});
  auto changed = apply_initial_change(c.instance, {{"t1"}, {}});
  auto out = reuse_plan(changed, c.original_plan);
  EXPECT_TRUE(out.hint_used);
  EXPECT_EQ(out.solution, c.original_plan);
}

TEST(ReusePlan, ThmOneNeverReuses) {
  for (const auto& f : enumerate_small_formulas(2, 2)) {
    auto c = sat_to_replanning(f);
    if (f.empty()) continue;
    auto out = reuse_plan(apply_initial_change(c), c.original_plan);
    ASSERT_FALSE(out.hint_used);
    ASSERT_EQ(out.solution.has_value(), oracle::sat(f)) << to_string(f);
  }
}

TEST(ReusePlan, EmptySuffixWhenGoalHolds) {
  StripsInstance inst;
  inst.conditions = {"p", "q"};
  inst.operators["op1"] = {{"q"}, {}, {"p"}, {}};
  inst.initial = {"p"};
  inst.goal.must_true = {"p"};
  auto out = reuse_plan(inst, Plan{{"op1"}});
  EXPECT_TRUE(out.hint_used);
  EXPECT_EQ(out.solution, Plan{});
}

TEST(ReusePlan, SuffixesValidateAndFallbackMatchesOracle) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    auto inst = random_plansat(rng, 6, 6);
    auto plan = plan_exists(inst);
    if (!plan) continue;
    InitialChange change;
    for (const auto& p : inst.conditions)
      if (rng() % 4 == 0) (inst.initial.count(p) ? change.remove : change.add).insert(p);
    auto changed = apply_initial_change(inst, change);
    auto out = reuse_plan(changed, *plan);
    ASSERT_EQ(out.solution.has_value(), oracle::plan_exists(changed));
    if (out.solution) { ASSERT_TRUE(oracle::plan_valid(changed, out.solution->steps)); }
    if (out.hint_used) {
      const auto& s = out.solution->steps;
      ASSERT_TRUE(std::equal(s.rbegin(), s.rend(), plan->steps.rbegin()));
    }
  }
}
