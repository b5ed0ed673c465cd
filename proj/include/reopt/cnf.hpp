#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace reopt {

/// Propositional variable id; valid ids start at 1.
using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  Literal negated() const { return {var, !positive}; }
  int to_dimacs() const { return positive ? int(var) : -int(var); }
  static Literal from_dimacs(int lit);

  auto operator<=>(const Literal&) const = default;
};

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

std::string to_string(Literal lit);

/// A disjunction of literals kept sorted by (variable, polarity) with
/// duplicates removed. Tautologies are representable.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits);
  explicit Clause(std::vector<Literal> lits);

  static Clause from_dimacs(std::span<const int> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal lit) const;
  bool is_tautology() const;
  bool is_unit() const { return lits_.size() == 1; }

  /// Clause with `lit` added, canonicalized.
  Clause with(Literal lit) const;
  /// Disjunction of two clauses, canonicalized.
  Clause merged(const Clause& other) const;

  auto operator<=>(const Clause&) const = default;
  bool operator==(const Clause&) const = default;

 private:
  std::vector<Literal> lits_;
};

std::string to_string(const Clause& clause);

/// Truth assignment; variables not listed are false.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<Var> true_vars) : true_vars_(true_vars) {}
  explicit Assignment(std::set<Var> true_vars) : true_vars_(std::move(true_vars)) {}

  bool value(Var v) const { return true_vars_.count(v) != 0; }
  bool satisfies(Literal lit) const { return value(lit.var) == lit.positive; }
  void set(Var v, bool value);
  const std::set<Var>& true_vars() const { return true_vars_; }

  bool operator==(const Assignment&) const = default;

 private:
  std::set<Var> true_vars_;
};

std::string to_string(const Assignment& a);

/// A set of clauses over a declared alphabet. Adding a clause extends the
/// alphabet with any variable the clause mentions.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(std::initializer_list<Clause> clauses);
  CnfFormula(std::set<Var> alphabet, std::initializer_list<Clause> clauses);

  /// Returns false if the clause was already present.
  bool add_clause(const Clause& clause);
  bool remove_clause(const Clause& clause);
  void declare(Var v);
  bool contains(const Clause& clause) const { return clauses_.count(clause) != 0; }

  const std::set<Var>& alphabet() const { return alphabet_; }
  const std::set<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  /// Largest declared variable id, 0 for an empty alphabet.
  Var max_var() const { return alphabet_.empty() ? 0 : *alphabet_.rbegin(); }
  /// Variables that occur in at least one clause.
  std::set<Var> mentioned() const;
  /// Total number of literal occurrences across clauses.
  std::size_t literal_occurrences() const;

  bool operator==(const CnfFormula&) const = default;

 private:
  std::set<Var> alphabet_;
  std::set<Clause> clauses_;
};

std::string to_string(const CnfFormula& f);

/// Ordered additions and deletions of clauses. A clause may not be both
/// added and deleted.
struct ChangeSet {
  std::vector<Clause> additions;
  std::vector<Clause> deletions;

  bool empty() const { return additions.empty() && deletions.empty(); }
  /// Throws InvalidChangeSet when a clause is both added and deleted.
  void validate() const;

  static ChangeSet add(Clause c) { return {{std::move(c)}, {}}; }
  static ChangeSet remove(Clause c) { return {{}, {std::move(c)}}; }
};

bool evaluate(const CnfFormula& formula, const Assignment& assignment);

/// Step counters shared by the solvers.
struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t assignments_tried = 0;

  std::uint64_t work() const { return decisions + propagations; }
};

inline constexpr std::size_t kDefaultOracleLimit = 20;

/// Exhaustive search by binary counting over the alphabet (lowest id is the
/// least significant bit). Throws AlphabetTooLarge above `limit`.
std::optional<Assignment> solve_brute(const CnfFormula& formula,
                                      std::size_t limit = kDefaultOracleLimit,
                                      SolverStats* stats = nullptr);

/// Number of models over the declared alphabet, by enumeration.
std::uint64_t count_models(const CnfFormula& formula,
                           std::size_t limit = kDefaultOracleLimit);

/// DPLL with unit propagation; branches on the lowest unassigned variable,
/// positive polarity first. Unassigned variables in a model are false.
std::optional<Assignment> solve_dpll(const CnfFormula& formula,
                                     SolverStats* stats = nullptr);

/// Deletions first, then additions. Deleting an absent clause is not an
/// error; such clauses are appended to `missing_deletions` when given.
CnfFormula apply_changes(const CnfFormula& formula, const ChangeSet& changes,
                         std::vector<Clause>* missing_deletions = nullptr);

bool is_alphabet_preserving(const CnfFormula& formula, const ChangeSet& changes);

/// {lit ∨ γ | γ ∈ formula}
CnfFormula disjoin_literal(const CnfFormula& formula, Literal lit);

/// {γ ∨ δ | γ ∈ left, δ ∈ right}
CnfFormula cross_disjoin(const CnfFormula& left, const CnfFormula& right);

}  // namespace reopt
