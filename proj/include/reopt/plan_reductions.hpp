#pragma once

#include <cstdint>
#include <string>

#include "reopt/cnf.hpp"
#include "reopt/strips.hpp"

namespace reopt {

struct InitialChange {
  std::set<Condition> add;
  std::set<Condition> remove;
};

/// An instance, a plan for it, and an edit to its initial state.
struct ReplanningCase {
  StripsInstance instance;
  Plan original_plan;
  InitialChange change;
};

/// Replanning encoding of a CNF formula. Conditions a, t<i>, f<i> per
/// variable x<i> and c<j> per clause (1-based, canonical clause order).
/// Operators:
///   pl_<i>   = ⟨∅, {f<i>, a}, {t<i>}, ∅⟩
///   nl_<i>   = ⟨∅, {t<i>, a}, {f<i>}, ∅⟩
///   pc_<j>_<i> = ⟨{t<i>}, ∅, {c<j>}, ∅⟩ for each positive x<i> in clause j
///   nc_<j>_<i> = ⟨{f<i>}, ∅, {c<j>}, ∅⟩ for each negative x<i> in clause j
///   e        = ⟨{a}, ∅, {c<1>..c<k>}, ∅⟩
/// I = {a}, goal ⟨{c<1>..c<k>}, ∅⟩, plan ⟨e⟩, change removes a. The changed
/// instance has a plan iff the formula is satisfiable.
ReplanningCase sat_to_replanning(const CnfFormula& f);

/// (I \ remove) ∪ add. Throws UnknownCondition for names outside P.
StripsInstance apply_initial_change(const ReplanningCase& c);
StripsInstance apply_initial_change(const StripsInstance& instance, const InitialChange& change);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1u << 22;

/// Valid plans of length at most `max_len` from which no single step can be
/// deleted. A negative `max_len` means |P|. Only PLANSAT+ instances are
/// accepted; in those every step of an irredundant plan adds a condition,
/// which bounds the enumeration.
std::uint64_t count_irredundant_plans(const StripsInstance& instance, int max_len = -1,
                                      std::uint64_t node_budget = kDefaultEnumerationBudget);

struct CompiledGoal {
  StripsInstance instance;
  Condition goal_condition;
  std::string goal_operator;
  bool renamed = false;  // default names collided and were suffixed
};

/// Adds condition g and operator o = ⟨M, N, {g}, ∅⟩ and sets the goal to
/// ⟨{g}, ∅⟩. Default names "g" and "o" get a numeric suffix on collision.
CompiledGoal goal_compilation(const StripsInstance& instance);

/// Same with caller-chosen names; throws NameCollision if either is taken.
CompiledGoal goal_compilation(const StripsInstance& instance, const Condition& goal_condition,
                              const std::string& goal_operator);

}  // namespace reopt
