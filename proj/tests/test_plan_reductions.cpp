#include <gtest/gtest.h>

#include "oracle.hpp"
#include "reopt/error.hpp"
#include "reopt/harness.hpp"
#include "reopt/plan_reductions.hpp"

using namespace reopt;

namespace {

StripsOperator op(State pre, State neg_pre, State post) {
  return {std::move(pre), std::move(neg_pre), std::move(post), {}};
}

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

TEST(SatToReplanning, Structure) {
  CnfFormula f{{pos(1), pos(2)}, {neg(1)}};
  auto c = sat_to_replanning(f);
  const auto& inst = c.instance;
  EXPECT_EQ(inst.conditions, (std::set<Condition>{"a", "t1", "t2", "f1", "f2", "c1", "c2"}));
  EXPECT_EQ(inst.initial, State{"a"});
  EXPECT_EQ(inst.goal.must_true, (std::set<Condition>{"c1", "c2"}));
  EXPECT_TRUE(inst.goal.must_false.empty());
  // 2 set-operators per variable, one derivation per literal occurrence, e.
  EXPECT_EQ(inst.operators.size(), 4u + 3u + 1u);
  EXPECT_EQ(inst.operators.at("pl_2"), op({}, {"f2", "a"}, {"t2"}));
  // Canonical order puts {¬x1} first.
  EXPECT_EQ(inst.operators.at("nc_1_1"), op({"f1"}, {}, {"c1"}));
  EXPECT_EQ(inst.operators.at("pc_2_1"), op({"t1"}, {}, {"c2"}));
  EXPECT_EQ(inst.operators.at("pc_2_2"), op({"t2"}, {}, {"c2"}));
  EXPECT_EQ(c.original_plan, Plan{{"e"}});
  EXPECT_EQ(c.change.remove, (std::set<Condition>{"a"}));
  EXPECT_TRUE(c.change.add.empty());
  EXPECT_TRUE(check_positive_postconditions(inst));
}

TEST(SatToReplanning, UnsatisfiableFormulaHasNoPlan) {
  auto changed = apply_initial_change(sat_to_replanning(CnfFormula{{pos(1)}, {neg(1)}}));
  EXPECT_FALSE(oracle::plan_exists(changed));
  EXPECT_FALSE(plan_exists(changed));
}

TEST(SatToReplanning, SatisfiableFormulaHasPlan) {
  auto changed = apply_initial_change(sat_to_replanning(CnfFormula{{pos(1), pos(2)}, {neg(1)}}));
  EXPECT_TRUE(oracle::plan_exists(changed));
  EXPECT_TRUE(plan_exists(changed));
}

TEST(SatToReplanning, NoClausesGivesVacuousGoal) {
  auto c = sat_to_replanning(CnfFormula({1}, {}));
  EXPECT_TRUE(c.instance.goal.must_true.empty());
  EXPECT_TRUE(validate_plan(apply_initial_change(c), Plan{}));
}

TEST(SatToReplanning, ContractOnSmallFormulas) {
  for (const auto& f : enumerate_small_formulas(2, 3)) {
    auto c = sat_to_replanning(f);
    ASSERT_TRUE(validate_plan(c.instance, c.original_plan));
    ASSERT_EQ(oracle::plan_exists(apply_initial_change(c)), oracle::sat(f)) << to_string(f);
    ASSERT_EQ(bool(plan_exists(apply_initial_change(c))), oracle::sat(f)) << to_string(f);
  }
}

TEST(ApplyInitialChange, Examples) {
  auto c = sat_to_replanning(CnfFormula{{pos(1)}});
  auto changed = apply_initial_change(c);
  EXPECT_TRUE(changed.initial.empty());
  EXPECT_EQ(changed.operators, c.instance.operators);
  EXPECT_EQ(changed.goal, c.instance.goal);
  EXPECT_EQ(apply_initial_change(c.instance, {}), c.instance);
  auto with_t1 = apply_initial_change(changed, {{"t1"}, {}});
  EXPECT_EQ(with_t1.initial, State{"t1"});
  // t1 alone enables the derivation of c1.
  EXPECT_EQ(bool(plan_exists(with_t1)), oracle::plan_exists(with_t1));
  EXPECT_TRUE(oracle::plan_exists(with_t1));
  EXPECT_EQ(kind_of([&] { apply_initial_change(changed, {{"zz"}, {}}); }), ErrorKind::UnknownCondition);
}

TEST(CountIrredundant, ThmOneInstanceHasExactlyOne) {
  for (const auto& f : enumerate_small_formulas(2, 2)) {
    auto c = sat_to_replanning(f);
    if (c.instance.goal.must_true.empty()) continue;  // only the empty plan
    EXPECT_EQ(count_irredundant_plans(c.instance), 1u) << to_string(f);
  }
  auto small = sat_to_replanning(CnfFormula{{pos(1)}});
  EXPECT_EQ(oracle::irredundant_plans(small.instance, 3), 1u);
}

TEST(CountIrredundant, UnreachableGoal) {
  StripsInstance inst;
  inst.conditions = {"p", "q"};
  inst.operators["op1"] = op({"q"}, {}, {"p"});
  inst.goal.must_true = {"p"};
  EXPECT_EQ(count_irredundant_plans(inst), 0u);
}

TEST(CountIrredundant, GoalAlreadyHolds) {
  StripsInstance inst;
  inst.conditions = {"p"};
  inst.operators["op1"] = op({}, {}, {"p"});
  inst.initial = {"p"};
  inst.goal.must_true = {"p"};
  EXPECT_EQ(count_irredundant_plans(inst), 1u);
}

TEST(CountIrredundant, MatchesSequenceEnumeration) {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    auto inst = random_plansat(rng, 1 + i % 4, 1 + (i / 4) % 4);
    auto n = inst.conditions.size();
    ASSERT_EQ(count_irredundant_plans(inst), oracle::irredundant_plans(inst, n)) << i;
  }
}

TEST(CountIrredundant, BudgetExceeded) {
  auto inst = apply_initial_change(sat_to_replanning(CnfFormula{{pos(1), pos(2)}, {neg(1), pos(3)}}));
  EXPECT_EQ(kind_of([&] { count_irredundant_plans(inst, -1, 3); }), ErrorKind::BudgetExceeded);
}

TEST(GoalCompilation, GoalAlreadySatisfied) {
  StripsInstance inst;
  inst.conditions = {"p"};
  inst.initial = {"p"};
  inst.goal.must_true = {"p"};
  auto c = goal_compilation(inst);
  EXPECT_EQ(c.goal_condition, "g");
  EXPECT_EQ(c.goal_operator, "o");
  EXPECT_FALSE(c.renamed);
  EXPECT_EQ(c.instance.goal.must_true, std::set<Condition>{"g"});
  EXPECT_EQ(c.instance.operators.at("o"), op({"p"}, {}, {"g"}));
  auto plan = plan_exists(c.instance);
  ASSERT_TRUE(plan);
  EXPECT_EQ(*plan, Plan{{"o"}});
}

TEST(GoalCompilation, OneStepThenGoalOperator) {
  StripsInstance inst;
  inst.conditions = {"p"};
  inst.operators["op1"] = op({}, {}, {"p"});
  inst.goal.must_true = {"p"};
  auto c = goal_compilation(inst);
  EXPECT_TRUE(oracle::plan_exists(inst));
  EXPECT_TRUE(oracle::plan_exists(c.instance));
  auto plan = plan_exists(c.instance);
  ASSERT_TRUE(plan);
  EXPECT_EQ(*plan, (Plan{{"op1", "o"}}));
}

TEST(GoalCompilation, NameCollisions) {
  StripsInstance inst;
  inst.conditions = {"g", "g1"};
  inst.operators["o"] = op({}, {}, {"g"});
  inst.goal.must_true = {"g"};
  auto c = goal_compilation(inst);
  EXPECT_TRUE(c.renamed);
  EXPECT_EQ(inst.conditions.count(c.goal_condition), 0u);
  EXPECT_EQ(inst.operators.count(c.goal_operator), 0u);
  EXPECT_TRUE(plan_exists(c.instance));
  EXPECT_EQ(kind_of([&] { goal_compilation(inst, "g", "fresh"); }), ErrorKind::NameCollision);
  EXPECT_EQ(kind_of([&] { goal_compilation(inst, "fresh", "o"); }), ErrorKind::NameCollision);
}

TEST(GoalCompilation, EquivalentOnRandomInstances) {
  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    auto inst = random_plansat(rng, 1 + i % 6, 1 + (i / 6) % 6);
    auto c = goal_compilation(inst);
    ASSERT_EQ(oracle::plan_exists(inst), oracle::plan_exists(c.instance));
    ASSERT_EQ(bool(plan_exists(inst)), bool(plan_exists(c.instance)));
  }
}

TEST(GoalCompilation, GoalOperatorApplicableExactlyOnGoalStates) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    auto inst = random_plansat(rng, 5, 3);
    auto c = goal_compilation(inst);
    std::vector<Condition> conds(inst.conditions.begin(), inst.conditions.end());
    for (unsigned mask = 0; mask < (1u << conds.size()); ++mask) {
      State s;
      for (std::size_t b = 0; b < conds.size(); ++b)
        if ((mask >> b) & 1u) s.insert(conds[b]);
      ASSERT_EQ(is_applicable(s, c.instance.operators.at(c.goal_operator)), goal_satisfied(s, inst.goal));
    }
  }
}
