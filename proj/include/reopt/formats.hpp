#pragma once

#include <string>
#include <string_view>

#include "reopt/cnf.hpp"
#include "reopt/gadget.hpp"
#include "reopt/hint.hpp"
#include "reopt/strips.hpp"
#include "reopt/vc.hpp"

namespace reopt {

// DIMACS CNF. The header declares variables 1..nvars; "c" lines are
// comments. Writing requires a contiguous alphabet 1..n.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& formula);

// Change sets: one "+ <lits> 0" or "- <lits> 0" line per clause.
ChangeSet parse_change_set(std::string_view text);
std::string write_change_set(const ChangeSet& changes);

// Edge lists: "u v" per edge. A line with a single token declares an
// isolated node. Edges come first in sorted order, then isolated nodes.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& graph);

// STRIPS instances as JSON:
//   {"conditions": [...],
//    "operators": {"name": [[pos_pre], [neg_pre], [pos_post], [neg_post]]},
//    "initial": [...],
//    "goal": {"must_true": [...], "must_false": [...]}}
StripsInstance parse_instance_json(std::string_view text);
std::string write_instance_json(const StripsInstance& instance);

// Hint tables as JSON:
//   {"base": "<dimacs>", "bound": k,
//    "candidates": [{"op": "+", "clause": [1, -2]}, ...],
//    "entries": {"<hex mask>": [true vars] | null}}
HintTable parse_hint_table(std::string_view text);
std::string write_hint_table(const HintTable& table);

// Gadgets as JSON: source (DIMACS), budget, removals, nodes with roles and
// the edge list.
Gadget parse_gadget_json(std::string_view text);
std::string write_gadget_json(const Gadget& gadget);

/// DOT rendering with node shape and colour keyed by role.
std::string gadget_to_dot(const Gadget& gadget);

}  // namespace reopt
