#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reopt/cnf.hpp"
#include "reopt/vc.hpp"

namespace reopt {

enum class NodeRole { Literal, Prime, DoublePrime, ClauseMember };

std::string_view to_string(NodeRole role);
NodeRole parse_node_role(std::string_view text);

/// Node names used by the gadget: "x3", "~x3", "x3'", "~x3''", "c2_1".
NodeId literal_node(Literal lit);
NodeId prime_node(Literal lit);
NodeId double_prime_node(Literal lit);
NodeId clause_node(std::size_t clause_index, std::size_t position);

/// Vertex-cover encoding of a CNF formula with clauses of one to three
/// literals. The source formula is satisfiable iff the graph has a cover of
/// at most `budget.k` nodes.
///
/// Each variable x contributes x, ~x, x', ~x', x'', ~x'' and the edge
/// (x, ~x). A clause of j >= 2 literals contributes a j-clique whose
/// members are joined to their literal nodes. A unit clause l is the edge
/// (l, l'). Base budget is n + m - r.
///
/// Unit edits only ever add edges:
///   add l      (l, l') when absent, otherwise (l, l'') after a removal
///   remove l   (l', l'') and the budget grows by one
struct Gadget {
  Graph graph;
  CoverBudget budget;
  std::size_t removals = 0;
  std::map<NodeId, NodeRole> roles;
  CnfFormula source;

  /// n + m - r of the construction before any removal.
  std::size_t base_budget() const { return budget.k - removals; }
};

/// Throws ClauseSize for clauses outside 1..3 literals and TautologyRejected
/// for x ∨ ~x.
Gadget build_gadget(const CnfFormula& f);

/// Throws UnknownVariable, UnitAlreadyPresent, or UnitHistoryExhausted when
/// the literal was already added, removed and re-added.
Gadget gadget_add_unit(const Gadget& g, Literal lit);

/// Throws UnitNotPresent, or UnitHistoryExhausted for a unit that was
/// re-added after a removal.
Gadget gadget_remove_unit(const Gadget& g, Literal lit);

/// Every non-tautological clause over three distinct variables, in
/// canonical order.
std::vector<Clause> three_clause_universe(const std::set<Var>& alphabet);

/// Gadget of the full three-literal clause universe over `alphabet`.
Gadget build_full_gadget(const std::set<Var>& alphabet);

/// Drops the clause-to-literal edges of every universe clause outside `f`.
/// The node set and the budget of `full` are unchanged, so `f` is
/// satisfiable iff the result has a cover within `full.budget`.
/// Throws ClauseOutsideUniverse.
Graph project_formula(const Gadget& full, const CnfFormula& f);

}  // namespace reopt
