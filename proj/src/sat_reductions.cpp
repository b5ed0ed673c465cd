#include "reopt/sat_reductions.hpp"

namespace reopt {

FixedModelInstance reduce_fixed_model(const CnfFormula& g) {
  const Var a = fresh_variable(g);
  return {disjoin_literal(g, pos(a)), Clause{neg(a)}, Assignment{a}, a};
}

UniqueModelInstance reduce_unique_model(const CnfFormula& g) {
  const Var a = fresh_variable(g);

  CnfFormula left;
  for (Var x : g.alphabet()) left.add_clause(Clause{pos(x)});
  left.add_clause(Clause{pos(a)});

  CnfFormula right = g;
  right.add_clause(Clause{neg(a)});

  CnfFormula f = cross_disjoin(left, right);
  f.add_clause(Clause{pos(a)});
  return {std::move(f), Clause{neg(a)}, Clause{pos(a)}, a};
}

NsatInstance make_nsat_instance(const CnfFormula& y) {
  return {std::string(y.alphabet().size(), '1'), y};
}

}  // namespace reopt
