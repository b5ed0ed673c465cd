#include "reopt/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "reopt/error.hpp"

namespace reopt {

Literal Literal::from_dimacs(int lit) {
  if (lit == 0) throw Error(ErrorKind::Parse, "literal 0 is the clause terminator");
  return {Var(std::abs(lit)), lit > 0};
}

std::string to_string(Literal lit) {
  return (lit.positive ? "x" : "~x") + std::to_string(lit.var);
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  for (const auto& l : lits_)
    if (l.var == 0) throw Error(ErrorKind::UnknownVariable, "variable id 0");
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::from_dimacs(std::span<const int> lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (int l : lits) out.push_back(Literal::from_dimacs(l));
  return Clause(std::move(out));
}

bool Clause::contains(Literal lit) const {
  return std::binary_search(lits_.begin(), lits_.end(), lit);
}

bool Clause::is_tautology() const {
  // Sorted order puts ~x directly before x.
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].var == lits_[i - 1].var) return true;
  return false;
}

Clause Clause::with(Literal lit) const {
  auto lits = lits_;
  lits.push_back(lit);
  return Clause(std::move(lits));
}

Clause Clause::merged(const Clause& other) const {
  auto lits = lits_;
  lits.insert(lits.end(), other.lits_.begin(), other.lits_.end());
  return Clause(std::move(lits));
}

std::string to_string(const Clause& clause) {
  std::string out = "{";
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i) out += ",";
    out += to_string(clause.literals()[i]);
  }
  return out + "}";
}

void Assignment::set(Var v, bool value) {
  if (value)
    true_vars_.insert(v);
  else
    true_vars_.erase(v);
}

std::string to_string(const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (Var v : a.true_vars()) {
    if (!first) out += ",";
    first = false;
    out += "x" + std::to_string(v);
  }
  return out + "}";
}

CnfFormula::CnfFormula(std::initializer_list<Clause> clauses) {
  for (const auto& c : clauses) add_clause(c);
}

CnfFormula::CnfFormula(std::set<Var> alphabet, std::initializer_list<Clause> clauses)
    : alphabet_(std::move(alphabet)) {
  if (alphabet_.count(0)) throw Error(ErrorKind::UnknownVariable, "variable id 0");
  for (const auto& c : clauses) add_clause(c);
}

bool CnfFormula::add_clause(const Clause& clause) {
  for (const auto& l : clause.literals()) alphabet_.insert(l.var);
  return clauses_.insert(clause).second;
}

bool CnfFormula::remove_clause(const Clause& clause) { return clauses_.erase(clause) != 0; }

void CnfFormula::declare(Var v) {
  if (v == 0) throw Error(ErrorKind::UnknownVariable, "variable id 0");
  alphabet_.insert(v);
}

std::set<Var> CnfFormula::mentioned() const {
  std::set<Var> out;
  for (const auto& c : clauses_)
    for (const auto& l : c.literals()) out.insert(l.var);
  return out;
}

std::size_t CnfFormula::literal_occurrences() const {
  std::size_t m = 0;
  for (const auto& c : clauses_) m += c.size();
  return m;
}

std::string to_string(const CnfFormula& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : f.clauses()) {
    if (!first) out += ",";
    first = false;
    out += to_string(c);
  }
  return out + "}";
}

void ChangeSet::validate() const {
  std::set<Clause> added(additions.begin(), additions.end());
  for (const auto& c : deletions)
    if (added.count(c))
      throw Error(ErrorKind::InvalidChangeSet,
                  "clause " + to_string(c) + " is both added and deleted");
}

bool evaluate(const CnfFormula& formula, const Assignment& assignment) {
  return std::all_of(formula.clauses().begin(), formula.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.literals().begin(), c.literals().end(),
                       [&](Literal l) { return assignment.satisfies(l); });
  });
}

namespace {

// Clauses over dense variable indices, shared by the enumerator and DPLL.
struct DenseCnf {
  std::vector<Var> vars;  // index -> id, ascending
  std::vector<std::vector<int>> clauses;  // literal = +/-(index + 1)

  explicit DenseCnf(const CnfFormula& f) : vars(f.alphabet().begin(), f.alphabet().end()) {
    std::unordered_map<Var, int> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = int(i) + 1;
    for (const auto& c : f.clauses()) {
      std::vector<int> dense;
      for (const auto& l : c.literals()) dense.push_back(l.positive ? index[l.var] : -index[l.var]);
      clauses.push_back(std::move(dense));
    }
  }
};

void check_oracle_limit(const CnfFormula& formula, std::size_t limit) {
  if (formula.alphabet().size() > limit || formula.alphabet().size() >= 63)
    throw Error(ErrorKind::AlphabetTooLarge,
                std::to_string(formula.alphabet().size()) + " variables exceed oracle limit " +
                    std::to_string(limit));
}

bool mask_satisfies(const DenseCnf& cnf, std::uint64_t mask) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      bool v = (mask >> (std::abs(lit) - 1)) & 1u;
      if (v == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Assignment mask_to_assignment(const DenseCnf& cnf, std::uint64_t mask) {
  Assignment a;
  for (std::size_t i = 0; i < cnf.vars.size(); ++i)
    if ((mask >> i) & 1u) a.set(cnf.vars[i], true);
  return a;
}

class Dpll {
 public:
  Dpll(const DenseCnf& cnf, SolverStats& stats)
      : cnf_(cnf), values_(cnf.vars.size(), kUnassigned), stats_(stats) {}

  bool solve() { return search(); }

  Assignment model() const {
    Assignment a;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == 1) a.set(cnf_.vars[i], true);
    return a;
  }

 private:
  static constexpr signed char kUnassigned = -1;

  signed char value_of(int lit) const {
    signed char v = values_[std::abs(lit) - 1];
    if (v == kUnassigned) return kUnassigned;
    return lit > 0 ? v : static_cast<signed char>(1 - v);
  }

  void assign(int lit) {
    values_[std::abs(lit) - 1] = lit > 0 ? 1 : 0;
    trail_.push_back(std::abs(lit) - 1);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  // Returns false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : cnf_.clauses) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : clause) {
          auto v = value_of(lit);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == kUnassigned) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last);
          ++stats_.propagations;
          changed = true;
        }
      }
    }
    return true;
  }

  // Lowest-indexed unassigned variable in a clause not yet satisfied, or -1
  // when every clause is satisfied.
  int pick_branch() const {
    int best = -1;
    for (const auto& clause : cnf_.clauses) {
      bool sat = false;
      int lowest = -1;
      for (int lit : clause) {
        auto v = value_of(lit);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v == kUnassigned && (lowest < 0 || std::abs(lit) - 1 < lowest)) lowest = std::abs(lit) - 1;
      }
      if (!sat && lowest >= 0 && (best < 0 || lowest < best)) best = lowest;
    }
    return best;
  }

  bool search() {
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    int var = pick_branch();
    if (var < 0) return true;
    for (int polarity : {1, -1}) {
      ++stats_.decisions;
      std::size_t branch_mark = trail_.size();
      assign(polarity * (var + 1));
      if (search()) return true;
      undo(branch_mark);
    }
    undo(mark);
    return false;
  }

  const DenseCnf& cnf_;
  std::vector<signed char> values_;
  std::vector<int> trail_;
  SolverStats& stats_;
};

}  // namespace

std::optional<Assignment> solve_brute(const CnfFormula& formula, std::size_t limit,
                                      SolverStats* stats) {
  check_oracle_limit(formula, limit);
  DenseCnf cnf(formula);
  const std::uint64_t total = std::uint64_t{1} << cnf.vars.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (stats) ++stats->assignments_tried;
    if (mask_satisfies(cnf, mask)) return mask_to_assignment(cnf, mask);
  }
  return std::nullopt;
}

std::uint64_t count_models(const CnfFormula& formula, std::size_t limit) {
  check_oracle_limit(formula, limit);
  DenseCnf cnf(formula);
  const std::uint64_t total = std::uint64_t{1} << cnf.vars.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_satisfies(cnf, mask)) ++count;
  return count;
}

std::optional<Assignment> solve_dpll(const CnfFormula& formula, SolverStats* stats) {
  SolverStats local;
  DenseCnf cnf(formula);
  Dpll solver(cnf, stats ? *stats : local);
  if (!solver.solve()) return std::nullopt;
  return solver.model();
}

CnfFormula apply_changes(const CnfFormula& formula, const ChangeSet& changes,
                         std::vector<Clause>* missing_deletions) {
  changes.validate();
  CnfFormula out = formula;
  for (const auto& c : changes.deletions)
    if (!out.remove_clause(c) && missing_deletions) missing_deletions->push_back(c);
  for (const auto& c : changes.additions) out.add_clause(c);
  return out;
}

bool is_alphabet_preserving(const CnfFormula& formula, const ChangeSet& changes) {
  const auto& alphabet = formula.alphabet();
  for (const auto& c : changes.additions)
    for (const auto& l : c.literals())
      if (!alphabet.count(l.var)) return false;
  return true;
}

CnfFormula disjoin_literal(const CnfFormula& formula, Literal lit) {
  CnfFormula out;
  for (Var v : formula.alphabet()) out.declare(v);
  out.declare(lit.var);
  for (const auto& c : formula.clauses()) out.add_clause(c.with(lit));
  return out;
}

CnfFormula cross_disjoin(const CnfFormula& left, const CnfFormula& right) {
  CnfFormula out;
  for (Var v : left.alphabet()) out.declare(v);
  for (Var v : right.alphabet()) out.declare(v);
  for (const auto& l : left.clauses())
    for (const auto& r : right.clauses()) out.add_clause(l.merged(r));
  return out;
}

}  // namespace reopt
