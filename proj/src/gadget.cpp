#include "reopt/gadget.hpp"

#include "reopt/error.hpp"

namespace reopt {

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Literal: return "literal";
    case NodeRole::Prime: return "prime";
    case NodeRole::DoublePrime: return "double_prime";
    case NodeRole::ClauseMember: return "clause_member";
  }
  return "literal";
}

NodeRole parse_node_role(std::string_view text) {
  if (text == "literal") return NodeRole::Literal;
  if (text == "prime") return NodeRole::Prime;
  if (text == "double_prime") return NodeRole::DoublePrime;
  if (text == "clause_member") return NodeRole::ClauseMember;
  throw Error(ErrorKind::Parse, "unknown node role '" + std::string(text) + "'");
}

NodeId literal_node(Literal lit) { return to_string(lit); }
NodeId prime_node(Literal lit) { return to_string(lit) + "'"; }
NodeId double_prime_node(Literal lit) { return to_string(lit) + "''"; }
NodeId clause_node(std::size_t clause_index, std::size_t position) {
  return "c" + std::to_string(clause_index) + "_" + std::to_string(position);
}

namespace {

void check_gadget_clause(const Clause& c) {
  if (c.empty() || c.size() > 3)
    throw Error(ErrorKind::ClauseSize, "clause " + to_string(c) + " has " +
                                           std::to_string(c.size()) + " literals, expected 1..3");
  if (c.is_tautology()) throw Error(ErrorKind::TautologyRejected, "clause " + to_string(c));
}

void add_variable_nodes(Gadget& g, Var x) {
  for (Literal lit : {pos(x), neg(x)}) {
    g.graph.add_node(literal_node(lit));
    g.graph.add_node(prime_node(lit));
    g.graph.add_node(double_prime_node(lit));
    g.roles[literal_node(lit)] = NodeRole::Literal;
    g.roles[prime_node(lit)] = NodeRole::Prime;
    g.roles[double_prime_node(lit)] = NodeRole::DoublePrime;
  }
  g.graph.add_edge(literal_node(pos(x)), literal_node(neg(x)));
}

// Clique for clauses of two or more literals, the (l, l') edge for units.
void add_clause_nodes(Gadget& g, const Clause& c, std::size_t index) {
  const auto& lits = c.literals();
  if (lits.size() == 1) {
    g.graph.add_edge(literal_node(lits[0]), prime_node(lits[0]));
    return;
  }
  for (std::size_t p = 0; p < lits.size(); ++p) {
    NodeId member = clause_node(index, p + 1);
    g.graph.add_node(member);
    g.roles[member] = NodeRole::ClauseMember;
    g.graph.add_edge(member, literal_node(lits[p]));
    for (std::size_t q = 0; q < p; ++q) g.graph.add_edge(member, clause_node(index, q + 1));
  }
}

std::size_t construction_budget(const CnfFormula& f) {
  return f.alphabet().size() + f.literal_occurrences() - f.size();
}

}  // namespace

Gadget build_gadget(const CnfFormula& f) {
  for (const auto& c : f.clauses()) check_gadget_clause(c);
  Gadget g;
  g.source = f;
  for (Var x : f.alphabet()) add_variable_nodes(g, x);
  std::size_t index = 0;
  for (const auto& c : f.clauses()) add_clause_nodes(g, c, ++index);
  g.budget.k = construction_budget(f);
  return g;
}

Gadget gadget_add_unit(const Gadget& g, Literal lit) {
  if (!g.source.alphabet().count(lit.var))
    throw Error(ErrorKind::UnknownVariable, to_string(lit) + " is outside the gadget alphabet");
  if (g.source.contains(Clause{lit}))
    throw Error(ErrorKind::UnitAlreadyPresent, "unit " + to_string(lit));

  Gadget out = g;
  const NodeId l = literal_node(lit), l1 = prime_node(lit), l2 = double_prime_node(lit);
  if (!g.graph.has_edge(l, l1)) {
    out.graph.add_edge(l, l1);
  } else if (g.graph.has_edge(l1, l2) && !g.graph.has_edge(l, l2)) {
    // After a removal l' is already paid for; closing the triangle l, l', l''
    // forces l back into any cover that fits the budget.
    out.graph.add_edge(l, l2);
  } else {
    throw Error(ErrorKind::UnitHistoryExhausted,
                "unit " + to_string(lit) + " cannot be re-added with edge additions alone");
  }
  out.source.add_clause(Clause{lit});
  return out;
}

Gadget gadget_remove_unit(const Gadget& g, Literal lit) {
  if (!g.source.contains(Clause{lit}))
    throw Error(ErrorKind::UnitNotPresent, "unit " + to_string(lit));

  const NodeId l1 = prime_node(lit), l2 = double_prime_node(lit);
  if (g.graph.has_edge(l1, l2))
    throw Error(ErrorKind::UnitHistoryExhausted,
                "unit " + to_string(lit) + " was already removed once");
  Gadget out = g;
  out.graph.add_edge(l1, l2);
  out.budget.k += 1;
  out.removals += 1;
  out.source.remove_clause(Clause{lit});
  return out;
}

std::vector<Clause> three_clause_universe(const std::set<Var>& alphabet) {
  const std::vector<Var> vars(alphabet.begin(), alphabet.end());
  std::set<Clause> universe;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      for (std::size_t k = j + 1; k < vars.size(); ++k)
        for (int signs = 0; signs < 8; ++signs)
          universe.insert(Clause{{vars[i], bool(signs & 1)},
                                 {vars[j], bool(signs & 2)},
                                 {vars[k], bool(signs & 4)}});
  return {universe.begin(), universe.end()};
}

Gadget build_full_gadget(const std::set<Var>& alphabet) {
  CnfFormula universe;
  for (Var x : alphabet) universe.declare(x);
  for (const auto& c : three_clause_universe(alphabet)) universe.add_clause(c);
  return build_gadget(universe);
}

Graph project_formula(const Gadget& full, const CnfFormula& f) {
  for (Var x : f.alphabet())
    if (!full.source.alphabet().count(x))
      throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(x) + " is outside the universe");
  for (const auto& c : f.clauses())
    if (!full.source.contains(c))
      throw Error(ErrorKind::ClauseOutsideUniverse, "clause " + to_string(c));

  Graph out = full.graph;
  std::size_t index = 0;
  for (const auto& c : full.source.clauses()) {
    ++index;
    if (f.contains(c) || c.size() < 2) continue;
    for (std::size_t p = 0; p < c.size(); ++p)
      out.remove_edge(clause_node(index, p + 1), literal_node(c.literals()[p]));
  }
  return out;
}

}  // namespace reopt
