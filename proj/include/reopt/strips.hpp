#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace reopt {

using Condition = std::string;
using State = std::set<Condition>;

/// ⟨φ, η, α, β⟩: positive/negative preconditions and postconditions.
struct StripsOperator {
  std::set<Condition> pos_pre;
  std::set<Condition> neg_pre;
  std::set<Condition> pos_post;
  std::set<Condition> neg_post;

  bool operator==(const StripsOperator&) const = default;
};

struct Goal {
  std::set<Condition> must_true;
  std::set<Condition> must_false;

  bool operator==(const Goal&) const = default;
};

struct StripsInstance {
  std::set<Condition> conditions;
  std::map<std::string, StripsOperator> operators;  // ordered by name
  State initial;
  Goal goal;

  /// Throws InvalidInstance on any condition outside P, φ ∩ η ≠ ∅ or M ∩ N ≠ ∅.
  void validate() const;
  bool operator==(const StripsInstance&) const = default;
};

struct Plan {
  std::vector<std::string> steps;

  bool operator==(const Plan&) const = default;
};

std::string to_string(const Plan& plan);

/// Counts unit operations (membership tests and inserts) so callers can
/// check that validation stays linear in |plan| · |P|.
struct PlanStats {
  std::uint64_t condition_checks = 0;
  std::uint64_t states_expanded = 0;
};

bool is_applicable(const State& state, const StripsOperator& op);

/// (state ∪ α) \ β. Throws NotApplicable naming the violated precondition.
State apply_operator(const State& state, const StripsOperator& op);

bool goal_satisfied(const State& state, const Goal& goal);

/// Throws UnknownOperator for a step that does not name an operator.
bool validate_plan(const StripsInstance& instance, const Plan& plan,
                   PlanStats* stats = nullptr);

bool check_positive_postconditions(const StripsInstance& instance);

inline constexpr std::uint64_t kDefaultStateBudget = 1u << 20;

/// Breadth-first search over the monotone state lattice of a PLANSAT+
/// instance, expanding operators in name order. Returns a shortest plan.
/// Throws NegativePostconditions outside PLANSAT+ and BudgetExceeded when
/// more than `state_budget` states are visited.
std::optional<Plan> plan_exists(const StripsInstance& instance, PlanStats* stats = nullptr,
                                std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace reopt
