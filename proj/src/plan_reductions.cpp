#include "reopt/plan_reductions.hpp"

#include <unordered_map>

#include "reopt/error.hpp"

namespace reopt {

ReplanningCase sat_to_replanning(const CnfFormula& f) {
  ReplanningCase out;
  auto& inst = out.instance;
  const Condition a = "a";
  auto t = [](Var i) { return "t" + std::to_string(i); };
  auto fa = [](Var i) { return "f" + std::to_string(i); };

  inst.conditions.insert(a);
  for (Var i : f.alphabet()) {
    inst.conditions.insert(t(i));
    inst.conditions.insert(fa(i));
    inst.operators["pl_" + std::to_string(i)] = {{}, {fa(i), a}, {t(i)}, {}};
    inst.operators["nl_" + std::to_string(i)] = {{}, {t(i), a}, {fa(i)}, {}};
  }

  StripsOperator e{{a}, {}, {}, {}};
  std::size_t j = 0;
  for (const auto& clause : f.clauses()) {
    const Condition c = "c" + std::to_string(++j);
    inst.conditions.insert(c);
    inst.goal.must_true.insert(c);
    e.pos_post.insert(c);
    for (const auto& lit : clause.literals()) {
      const std::string suffix = std::to_string(j) + "_" + std::to_string(lit.var);
      if (lit.positive)
        inst.operators["pc_" + suffix] = {{t(lit.var)}, {}, {c}, {}};
      else
        inst.operators["nc_" + suffix] = {{fa(lit.var)}, {}, {c}, {}};
    }
  }
  inst.operators["e"] = e;
  inst.initial = {a};
  out.original_plan = Plan{{"e"}};
  out.change.remove = {a};
  return out;
}

StripsInstance apply_initial_change(const StripsInstance& instance, const InitialChange& change) {
  for (const auto* side : {&change.add, &change.remove})
    for (const auto& c : *side)
      if (!instance.conditions.count(c))
        throw Error(ErrorKind::UnknownCondition, "condition '" + c + "'");
  StripsInstance out = instance;
  for (const auto& c : change.remove) out.initial.erase(c);
  out.initial.insert(change.add.begin(), change.add.end());
  return out;
}

StripsInstance apply_initial_change(const ReplanningCase& c) {
  return apply_initial_change(c.instance, c.change);
}

namespace {

class IrredundantEnumerator {
 public:
  IrredundantEnumerator(const StripsInstance& instance, std::size_t max_len,
                        std::uint64_t budget)
      : max_len_(max_len), budget_(budget) {
    std::unordered_map<Condition, int> index;
    int next = 0;
    for (const auto& c : instance.conditions) index[c] = next++;
    auto to_mask = [&](const std::set<Condition>& s) {
      std::uint64_t m = 0;
      for (const auto& c : s) m |= std::uint64_t{1} << index.at(c);
      return m;
    };
    for (const auto& [name, op] : instance.operators)
      ops_.push_back({to_mask(op.pos_pre), to_mask(op.neg_pre), to_mask(op.pos_post)});
    start_ = to_mask(instance.initial);
    must_true_ = to_mask(instance.goal.must_true);
    must_false_ = to_mask(instance.goal.must_false);
  }

  std::uint64_t run() {
    visit(start_);
    return count_;
  }

 private:
  struct Op {
    std::uint64_t pos_pre, neg_pre, pos_post;
  };

  bool applicable(std::uint64_t s, const Op& op) const {
    return (s & op.pos_pre) == op.pos_pre && (s & op.neg_pre) == 0;
  }
  bool reached(std::uint64_t s) const {
    return (s & must_true_) == must_true_ && (s & must_false_) == 0;
  }

  bool valid_without(std::size_t skip) const {
    std::uint64_t s = start_;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (i == skip) continue;
      const auto& op = ops_[path_[i]];
      if (!applicable(s, op)) return false;
      s |= op.pos_post;
    }
    return reached(s);
  }

  bool irredundant() const {
    for (std::size_t i = 0; i < path_.size(); ++i)
      if (valid_without(i)) return false;
    return true;
  }

  void visit(std::uint64_t s) {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::BudgetExceeded,
                  "irredundant-plan enumeration exceeded " + std::to_string(budget_) + " nodes");
    if (reached(s) && irredundant()) ++count_;
    if (path_.size() >= max_len_) return;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const auto& op = ops_[i];
      // A step that adds nothing can always be deleted.
      if (!applicable(s, op) || (s | op.pos_post) == s) continue;
      path_.push_back(i);
      visit(s | op.pos_post);
      path_.pop_back();
    }
  }

  std::vector<Op> ops_;
  std::vector<std::size_t> path_;
  std::uint64_t start_ = 0, must_true_ = 0, must_false_ = 0;
  std::size_t max_len_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_irredundant_plans(const StripsInstance& instance, int max_len,
                                      std::uint64_t node_budget) {
  instance.validate();
  if (!check_positive_postconditions(instance))
    throw Error(ErrorKind::NegativePostconditions, "enumeration requires PLANSAT+ operators");
  if (instance.conditions.size() > 64)
    throw Error(ErrorKind::BudgetExceeded, "more than 64 conditions");
  std::size_t bound = max_len < 0 ? instance.conditions.size() : std::size_t(max_len);
  return IrredundantEnumerator(instance, bound, node_budget).run();
}

namespace {

std::string fresh_name(const std::string& base, auto&& taken) {
  if (!taken(base)) return base;
  for (int nonce = 1;; ++nonce) {
    std::string candidate = base + "_" + std::to_string(nonce);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

CompiledGoal goal_compilation(const StripsInstance& instance, const Condition& goal_condition,
                              const std::string& goal_operator) {
  if (instance.conditions.count(goal_condition))
    throw Error(ErrorKind::NameCollision, "condition '" + goal_condition + "' already exists");
  if (instance.operators.count(goal_operator))
    throw Error(ErrorKind::NameCollision, "operator '" + goal_operator + "' already exists");

  CompiledGoal out{instance, goal_condition, goal_operator, false};
  out.instance.conditions.insert(goal_condition);
  out.instance.operators[goal_operator] = {
      instance.goal.must_true, instance.goal.must_false, {goal_condition}, {}};
  out.instance.goal = Goal{{goal_condition}, {}};
  return out;
}

CompiledGoal goal_compilation(const StripsInstance& instance) {
  const Condition g =
      fresh_name("g", [&](const std::string& n) { return instance.conditions.count(n) != 0; });
  const std::string o =
      fresh_name("o", [&](const std::string& n) { return instance.operators.count(n) != 0; });
  auto out = goal_compilation(instance, g, o);
  out.renamed = g != "g" || o != "o";
  return out;
}

}  // namespace reopt
