#include "reopt/strips.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "reopt/error.hpp"

namespace reopt {

namespace {

void check_subset(const std::set<Condition>& sub, const std::set<Condition>& universe,
                  const std::string& where) {
  for (const auto& c : sub)
    if (!universe.count(c))
      throw Error(ErrorKind::InvalidInstance, where + " mentions unknown condition '" + c + "'");
}

bool disjoint(const std::set<Condition>& a, const std::set<Condition>& b) {
  return std::none_of(a.begin(), a.end(), [&](const Condition& c) { return b.count(c) != 0; });
}

}  // namespace

void StripsInstance::validate() const {
  check_subset(initial, conditions, "initial state");
  check_subset(goal.must_true, conditions, "goal");
  check_subset(goal.must_false, conditions, "goal");
  if (!disjoint(goal.must_true, goal.must_false))
    throw Error(ErrorKind::InvalidInstance, "goal requires a condition both true and false");
  for (const auto& [name, op] : operators) {
    check_subset(op.pos_pre, conditions, "operator " + name);
    check_subset(op.neg_pre, conditions, "operator " + name);
    check_subset(op.pos_post, conditions, "operator " + name);
    check_subset(op.neg_post, conditions, "operator " + name);
    if (!disjoint(op.pos_pre, op.neg_pre))
      throw Error(ErrorKind::InvalidInstance, "operator " + name + " has contradictory preconditions");
  }
}

std::string to_string(const Plan& plan) {
  std::string out = "<";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (i) out += ", ";
    out += plan.steps[i];
  }
  return out + ">";
}

bool is_applicable(const State& state, const StripsOperator& op) {
  return std::all_of(op.pos_pre.begin(), op.pos_pre.end(),
                     [&](const Condition& c) { return state.count(c) != 0; }) &&
         disjoint(op.neg_pre, state);
}

State apply_operator(const State& state, const StripsOperator& op) {
  for (const auto& c : op.pos_pre)
    if (!state.count(c))
      throw Error(ErrorKind::NotApplicable, "positive precondition '" + c + "' is false");
  for (const auto& c : op.neg_pre)
    if (state.count(c))
      throw Error(ErrorKind::NotApplicable, "negative precondition '" + c + "' is true");
  State out = state;
  out.insert(op.pos_post.begin(), op.pos_post.end());
  for (const auto& c : op.neg_post) out.erase(c);
  return out;
}

bool goal_satisfied(const State& state, const Goal& goal) {
  return std::all_of(goal.must_true.begin(), goal.must_true.end(),
                     [&](const Condition& c) { return state.count(c) != 0; }) &&
         disjoint(goal.must_false, state);
}

bool validate_plan(const StripsInstance& instance, const Plan& plan, PlanStats* stats) {
  std::uint64_t checks = 0;
  std::vector<const StripsOperator*> ops;
  ops.reserve(plan.steps.size());
  for (const auto& name : plan.steps) {
    auto it = instance.operators.find(name);
    if (it == instance.operators.end())
      throw Error(ErrorKind::UnknownOperator, "plan step '" + name + "'");
    ops.push_back(&it->second);
  }

  State state = instance.initial;
  bool ok = true;
  for (const auto* op : ops) {
    checks += op->pos_pre.size() + op->neg_pre.size();
    if (!is_applicable(state, *op)) {
      ok = false;
      break;
    }
    checks += op->pos_post.size() + op->neg_post.size();
    state.insert(op->pos_post.begin(), op->pos_post.end());
    for (const auto& c : op->neg_post) state.erase(c);
  }
  if (ok) {
    checks += instance.goal.must_true.size() + instance.goal.must_false.size();
    ok = goal_satisfied(state, instance.goal);
  }
  if (stats) stats->condition_checks += checks;
  return ok;
}

bool check_positive_postconditions(const StripsInstance& instance) {
  return std::all_of(instance.operators.begin(), instance.operators.end(),
                     [](const auto& entry) { return entry.second.neg_post.empty(); });
}

std::optional<Plan> plan_exists(const StripsInstance& instance, PlanStats* stats,
                                std::uint64_t state_budget) {
  instance.validate();
  if (!check_positive_postconditions(instance))
    throw Error(ErrorKind::NegativePostconditions, "plan search requires PLANSAT+ operators");
  if (instance.conditions.size() > 64)
    throw Error(ErrorKind::BudgetExceeded, "more than 64 conditions");

  std::unordered_map<Condition, int> index;
  int next = 0;
  for (const auto& c : instance.conditions) index[c] = next++;
  auto to_mask = [&](const std::set<Condition>& s) {
    std::uint64_t m = 0;
    for (const auto& c : s) m |= std::uint64_t{1} << index[c];
    return m;
  };

  struct DenseOp {
    const std::string* name;
    std::uint64_t pos_pre, neg_pre, pos_post;
  };
  std::vector<DenseOp> ops;
  for (const auto& [name, op] : instance.operators)
    ops.push_back({&name, to_mask(op.pos_pre), to_mask(op.neg_pre), to_mask(op.pos_post)});
  const std::uint64_t must_true = to_mask(instance.goal.must_true);
  const std::uint64_t must_false = to_mask(instance.goal.must_false);
  auto reached = [&](std::uint64_t s) {
    return (s & must_true) == must_true && (s & must_false) == 0;
  };

  // parent[state] = (previous state, operator index)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::size_t>> parent;
  auto rebuild = [&](std::uint64_t s) {
    Plan plan;
    const std::uint64_t start = to_mask(instance.initial);
    while (s != start) {
      auto [prev, op] = parent.at(s);
      plan.steps.push_back(*ops[op].name);
      s = prev;
    }
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
  };

  const std::uint64_t start = to_mask(instance.initial);
  if (reached(start)) return Plan{};
  std::deque<std::uint64_t> frontier{start};
  parent.emplace(start, std::pair{start, std::size_t(0)});
  while (!frontier.empty()) {
    std::uint64_t s = frontier.front();
    frontier.pop_front();
    if (stats) ++stats->states_expanded;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const auto& op = ops[i];
      if ((s & op.pos_pre) != op.pos_pre || (s & op.neg_pre) != 0) continue;
      std::uint64_t t = s | op.pos_post;
      if (t == s || parent.count(t)) continue;
      if (parent.size() >= state_budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(state_budget) + " states visited");
      parent.emplace(t, std::pair{s, i});
      if (reached(t)) return rebuild(t);
      frontier.push_back(t);
    }
  }
  return std::nullopt;
}

}  // namespace reopt
