#include <gtest/gtest.h>

#include "oracle.hpp"
#include "reopt/cnf.hpp"
#include "reopt/error.hpp"
#include "reopt/harness.hpp"

using namespace reopt;

namespace {

constexpr Var a = 9;  // stands in for the fresh variable in the examples

}  // namespace

TEST(Clause, CanonicalOrderAndDedup) {
  Clause c{pos(3), neg(1), pos(3), pos(1)};
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.literals()[0], neg(1));
  EXPECT_EQ(c.literals()[1], pos(1));
  EXPECT_EQ(c.literals()[2], pos(3));
  EXPECT_TRUE(c.is_tautology());
  EXPECT_EQ(Clause({pos(2), neg(1)}), Clause({neg(1), pos(2)}));
}

TEST(Literal, DimacsRoundTrip) {
  for (int lit : {1, -1, 7, -12}) EXPECT_EQ(Literal::from_dimacs(lit).to_dimacs(), lit);
  EXPECT_THROW(Literal::from_dimacs(0), Error);
}

TEST(Evaluate, EmptyFormulaIsTrue) { EXPECT_TRUE(evaluate(CnfFormula{}, Assignment{})); }

TEST(Evaluate, ContradictionPairIsFalse) {
  EXPECT_FALSE(evaluate(CnfFormula{{pos(1)}, {neg(1)}}, Assignment{1}));
}

TEST(Evaluate, FreshLiteralSatisfiesDisjoinedFormula) {
  EXPECT_TRUE(evaluate(CnfFormula{{pos(a), pos(1)}, {pos(a), neg(1)}}, Assignment{a}));
}

TEST(Evaluate, EmptyClauseIsFalse) {
  EXPECT_FALSE(evaluate(CnfFormula{Clause{}}, Assignment{}));
}

TEST(SolveBrute, EmptyFormulaGivesEmptyAssignment) {
  auto m = solve_brute(CnfFormula{});
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, Assignment{});
}

TEST(SolveBrute, ContradictionHasNoModel) {
  EXPECT_FALSE(solve_brute(CnfFormula{{pos(1)}, {neg(1)}}));
}

TEST(SolveBrute, FirstModelInCountingOrder) {
  CnfFormula f{{pos(1), pos(2)}, {neg(1)}};
  // Counting order over (x1 = bit 0, x2 = bit 1): 00, 10, 01 is the first model.
  std::optional<Assignment> expected;
  auto vars = oracle::variables(f);
  for (std::uint64_t bits = 0; bits < 4 && !expected; ++bits)
    if (oracle::row_satisfies(f, vars, bits)) {
      Assignment m;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if ((bits >> i) & 1u) m.set(vars[i], true);
      expected = m;
    }
  ASSERT_TRUE(expected);
  EXPECT_EQ(*expected, Assignment{2});
  EXPECT_EQ(solve_brute(f), expected);
}

TEST(SolveBrute, RejectsAlphabetAboveLimit) {
  CnfFormula f;
  for (Var v = 1; v <= 21; ++v) f.declare(v);
  try {
    solve_brute(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlphabetTooLarge);
  }
  EXPECT_TRUE(solve_brute(f, 21));
}

TEST(SolveDpll, UnitPropagation) {
  SolverStats stats;
  auto m = solve_dpll(CnfFormula{{pos(1)}}, &stats);
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, Assignment{1});
  EXPECT_EQ(stats.decisions, 0u);
}

TEST(SolveDpll, UnsatisfiableChain) {
  CnfFormula f{{pos(1), pos(2)}, {neg(1), pos(2)}, {neg(2)}};
  EXPECT_FALSE(oracle::sat(f));
  EXPECT_FALSE(solve_dpll(f));
}

TEST(SolveDpll, FixedModelChangedFormulaFollowsOracle) {
  // a ∨ x1, a ∨ ¬x1, ¬a: with a false the remaining clauses contradict.
  CnfFormula f{{pos(a), pos(1)}, {pos(a), neg(1)}, {neg(a)}};
  EXPECT_EQ(bool(solve_dpll(f)), oracle::sat(f));
  EXPECT_FALSE(oracle::sat(f));
}

TEST(SolveDpll, AgreesWithOracleOnEnumeration) {
  for (const auto& f : enumerate_small_formulas(3, 3)) {
    auto m = solve_dpll(f);
    ASSERT_EQ(bool(m), oracle::sat(f)) << to_string(f);
    if (m) { EXPECT_TRUE(evaluate(f, *m)) << to_string(f); }
  }
}

TEST(SolveDpll, AgreesWithBruteOnRandomFormulas) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_cnf(rng, {4, 6, 1, 3});
    auto d = solve_dpll(f);
    auto b = solve_brute(f);
    ASSERT_EQ(bool(d), bool(b)) << to_string(f);
    ASSERT_EQ(bool(b), oracle::sat(f));
    if (d) { EXPECT_TRUE(evaluate(f, *d)); }
    if (b) { EXPECT_TRUE(evaluate(f, *b)); }
  }
}

TEST(CountModels, MatchesOracle) {
  for (const auto& f : enumerate_small_formulas(3, 2)) EXPECT_EQ(count_models(f), oracle::model_count(f));
}

TEST(ApplyChanges, AddAndDeleteInOneStep) {
  CnfFormula f{{pos(a)}};
  auto g = apply_changes(f, ChangeSet{{Clause{neg(a)}}, {Clause{pos(a)}}});
  EXPECT_EQ(g.clauses(), (std::set<Clause>{Clause{neg(a)}}));
}

TEST(ApplyChanges, EmptyChangeIsIdentity) {
  CnfFormula f{{pos(1), neg(2)}, {pos(3)}};
  EXPECT_EQ(apply_changes(f, {}), f);
}

TEST(ApplyChanges, DuplicateAdditionIsIdempotent) {
  auto g = apply_changes(CnfFormula{}, ChangeSet{{Clause{pos(1)}, Clause{pos(1)}}, {}});
  EXPECT_EQ(g.size(), 1u);
}

TEST(ApplyChanges, MissingDeletionIsReported) {
  std::vector<Clause> missing;
  auto g = apply_changes(CnfFormula{{pos(1)}}, ChangeSet::remove(Clause{pos(2)}), &missing);
  EXPECT_EQ(g.size(), 1u);
  ASSERT_EQ(missing.size(), 1u);
  EXPECT_EQ(missing[0], Clause{pos(2)});
}

TEST(ApplyChanges, ClauseInBothListsIsRejected) {
  ChangeSet bad{{Clause{pos(1)}}, {Clause{pos(1)}}};
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(apply_changes(CnfFormula{}, bad), Error);
}

TEST(ApplyChanges, AlphabetIsKept) {
  CnfFormula f{{pos(1), pos(2)}};
  auto g = apply_changes(f, ChangeSet::remove(Clause{pos(1), pos(2)}));
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g.alphabet(), (std::set<Var>{1, 2}));
}

TEST(ApplyChanges, AddThenDeleteRestores) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    auto f = random_cnf(rng, {4, 4, 1, 3});
    auto c = random_clause(rng, 4, 1, 3);
    if (f.contains(c)) continue;
    EXPECT_EQ(apply_changes(apply_changes(f, ChangeSet::add(c)), ChangeSet::remove(c)), f);
  }
}

TEST(AlphabetPreserving, Examples) {
  CnfFormula f{{pos(1)}};
  EXPECT_TRUE(is_alphabet_preserving(f, ChangeSet::add(Clause{neg(1)})));
  EXPECT_FALSE(is_alphabet_preserving(f, ChangeSet::add(Clause{pos(2)})));
  EXPECT_FALSE(is_alphabet_preserving(CnfFormula{}, ChangeSet::add(Clause{pos(1)})));
  EXPECT_TRUE(is_alphabet_preserving(f, ChangeSet::remove(Clause{pos(1)})));
}

TEST(DisjoinLiteral, Examples) {
  EXPECT_EQ(disjoin_literal(CnfFormula{{pos(1)}}, pos(a)).clauses(),
            (std::set<Clause>{Clause{pos(a), pos(1)}}));
  EXPECT_TRUE(disjoin_literal(CnfFormula{}, pos(a)).empty());
  auto g = disjoin_literal(CnfFormula{{pos(1)}, {neg(1)}}, pos(a));
  EXPECT_EQ(g.clauses(), (std::set<Clause>{Clause{pos(a), pos(1)}, Clause{pos(a), neg(1)}}));
  // Under a = false the result is equisatisfiable with the source.
  auto restricted = apply_changes(g, ChangeSet::add(Clause{neg(a)}));
  EXPECT_EQ(oracle::sat(restricted), oracle::sat(CnfFormula{{pos(1)}, {neg(1)}}));
}

TEST(DisjoinLiteral, EveryAssignmentWithLiteralTrueSatisfies) {
  for (const auto& f : enumerate_small_formulas(3, 2)) {
    auto g = disjoin_literal(f, pos(4));
    for (unsigned bits = 0; bits < 8; ++bits) {
      Assignment m{4};
      for (Var v = 1; v <= 3; ++v)
        if ((bits >> (v - 1)) & 1u) m.set(v, true);
      EXPECT_TRUE(evaluate(g, m));
    }
  }
}

TEST(CrossDisjoin, Examples) {
  EXPECT_EQ(cross_disjoin(CnfFormula{{pos(1)}}, CnfFormula{{neg(a)}}).clauses(),
            (std::set<Clause>{Clause{pos(1), neg(a)}}));
  CnfFormula left{{pos(1)}, {pos(a)}};
  CnfFormula right{{pos(1)}, {neg(a)}};
  auto out = cross_disjoin(left, right);
  EXPECT_EQ(out.clauses(), (std::set<Clause>{Clause{pos(1)}, Clause{pos(1), neg(a)},
                                             Clause{pos(a), pos(1)}, Clause{pos(a), neg(a)}}));
  // Hand expansion checked through the model set.
  CnfFormula hand{{pos(1)}, {pos(1), neg(a)}, {pos(a), pos(1)}, {pos(a), neg(a)}};
  EXPECT_EQ(oracle::models(out), oracle::models(hand));
  EXPECT_TRUE(cross_disjoin(CnfFormula{}, right).empty());
}

TEST(CrossDisjoin, ModelsOfLeftSurvive) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto l = random_cnf(rng, {3, 2, 1, 2});
    auto r = random_cnf(rng, {3, 3, 1, 2});
    auto out = cross_disjoin(l, r);
    EXPECT_LE(out.size(), l.size() * r.size());
    for (const auto& m : oracle::models(l)) EXPECT_TRUE(evaluate(out, Assignment(m)));
  }
}
