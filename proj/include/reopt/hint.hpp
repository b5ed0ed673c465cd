#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "reopt/cnf.hpp"
#include "reopt/strips.hpp"

namespace reopt {

/// A single clause addition or deletion.
struct ElementaryChange {
  enum class Kind { Add, Delete };
  Kind kind = Kind::Add;
  Clause clause;

  bool operator==(const ElementaryChange&) const = default;
};

/// Bitmask over the candidate list; bit i selects candidate i.
using CandidateMask = std::uint32_t;

/// Solutions of every changed formula reachable from `base` by at most
/// `bound` of the declared candidate changes. An absent entry value marks an
/// unsatisfiable changed formula.
struct HintTable {
  CnfFormula base;
  std::vector<ElementaryChange> candidates;
  std::size_t bound = 0;
  std::map<CandidateMask, std::optional<Assignment>> entries;

  bool operator==(const HintTable&) const = default;
};

ChangeSet changes_for(const std::vector<ElementaryChange>& candidates, CandidateMask mask);

inline constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 16;

struct CompileOptions {
  std::size_t budget = kDefaultTableBudget;
  /// Cross-check every entry against solve_brute (exponential).
  bool verify = false;
};

/// Throws BudgetExceeded when the number of subsets of size <= bound exceeds
/// the budget, and InvalidChangeSet when a clause appears twice among the
/// candidates.
HintTable compile_table(const CnfFormula& base, std::vector<ElementaryChange> candidates,
                        std::size_t bound, const CompileOptions& options = {});

struct LookupResult {
  bool hit = false;
  std::optional<Assignment> solution;
};

/// Constant-time answer when `changes` is a registered subset of at most
/// `bound` candidates; a miss otherwise.
LookupResult lookup(const HintTable& table, const ChangeSet& changes);

template <typename Solution>
struct ReuseOutcome {
  std::optional<Solution> solution;
  bool hint_used = false;
  std::uint64_t work_units = 0;
};

/// Checks the hint against the changed formula (work = literals inspected)
/// and falls back to DPLL when it fails (work adds decisions and
/// propagations). Throws InvalidHint when the hint is not a model of `f`.
ReuseOutcome<Assignment> reuse_model(const CnfFormula& f, const ChangeSet& changes,
                                     const Assignment& hint);

/// Tries the old plan and each of its suffixes, longest first, against the
/// changed instance; falls back to plan search when none validates.
ReuseOutcome<Plan> reuse_plan(const StripsInstance& changed, const Plan& old_plan);

}  // namespace reopt
