#pragma once

#include <string>

#include "reopt/cnf.hpp"

namespace reopt {

/// ⟨F, γ, I⟩ where I is a model of F and F ∪ {γ} is satisfiable iff the
/// source formula is.
struct FixedModelInstance {
  CnfFormula formula;
  Clause change_clause;
  Assignment hint_model;
  Var fresh = 0;
};

/// F with exactly one model; F ∪ {add} \ {del} is satisfiable iff the
/// source formula is.
struct UniqueModelInstance {
  CnfFormula formula;
  Clause add_clause;
  Clause del_clause;
  Var fresh = 0;

  ChangeSet change() const { return {{add_clause}, {del_clause}}; }
};

/// A formula paired with the unary encoding of its alphabet size.
struct NsatInstance {
  std::string unary_part;
  CnfFormula formula;
};

/// Fresh variable used by both reductions: one past the largest declared id.
inline Var fresh_variable(const CnfFormula& g) { return g.max_var() + 1; }

/// G ↦ ⟨a ∨ G, ¬a, {a}⟩.
FixedModelInstance reduce_fixed_model(const CnfFormula& g);

/// G ↦ F = {a} ∪ ((units(X) ∪ {a}) ∨ (G ∪ {¬a})), change add ¬a / delete a.
/// The single model of F is {a} ∪ X.
UniqueModelInstance reduce_unique_model(const CnfFormula& g);

/// Counts the declared alphabet, not only mentioned variables.
NsatInstance make_nsat_instance(const CnfFormula& y);

}  // namespace reopt
