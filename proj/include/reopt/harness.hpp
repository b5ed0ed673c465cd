#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reopt/cnf.hpp"
#include "reopt/strips.hpp"
#include "reopt/vc.hpp"

namespace reopt {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Instance generation

struct CnfShape {
  std::size_t variables = 3;
  std::size_t clauses = 4;
  std::size_t min_clause_size = 1;
  std::size_t max_clause_size = 3;
};

/// Clauses over distinct variables (never tautological), alphabet 1..n.
Clause random_clause(Rng& rng, std::size_t variables, std::size_t min_size, std::size_t max_size);
CnfFormula random_cnf(Rng& rng, const CnfShape& shape);

/// Random PLANSAT+ instance over conditions p0..p<n-1> with operators
/// op0..op<m-1>.
StripsInstance random_plansat(Rng& rng, std::size_t conditions, std::size_t operators);

Graph random_graph(Rng& rng, std::size_t nodes, double edge_probability);

/// Every formula over alphabet {1..n}, n <= max_vars, whose clauses are
/// distinct non-tautological clauses of 1..max_size literals over distinct
/// variables, at most max_clauses of them. Ordered by alphabet size, then
/// clause count.
std::vector<CnfFormula> enumerate_small_formulas(std::size_t max_vars, std::size_t max_clauses,
                                                 std::size_t max_size = 3);

// ---------------------------------------------------------------------------
// Verification sweeps

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t oracle_limit = kDefaultOracleLimit;
  /// Added to every gadget budget; nonzero values exist to show that the
  /// sweep catches a broken construction.
  long gadget_budget_offset = 0;
  std::size_t random_gadget_formulas = 500;
  std::size_t random_solver_formulas = 1000;
  std::size_t random_plansat_instances = 200;
  std::size_t hint_configurations = 50;
  std::size_t round_trip_artifacts = 100;
};

struct VerifyReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0;

  bool passed() const { return counterexamples.empty(); }
};

VerifyReport verify_gadget_example(const VerifyOptions& opts = {});
VerifyReport verify_gadget_sweep(const VerifyOptions& opts = {});
VerifyReport verify_sat_reductions(const VerifyOptions& opts = {});
VerifyReport verify_replanning(const VerifyOptions& opts = {});
VerifyReport verify_goal_compilation(const VerifyOptions& opts = {});
VerifyReport verify_hint_tables(const VerifyOptions& opts = {});
VerifyReport verify_solver_crosscheck(const VerifyOptions& opts = {});
VerifyReport verify_round_trips(const VerifyOptions& opts = {});

/// Suites: sat-reductions, vc-gadget, plan-reductions, hint-tables,
/// solvers, formats, all. Throws InvalidConfig for an unknown name.
std::vector<VerifyReport> verify_suite(const std::string& suite, const VerifyOptions& opts = {});
const std::vector<std::string>& verify_suite_names();

// ---------------------------------------------------------------------------
// Cold-versus-hinted experiments

struct ExperimentConfig {
  std::uint64_t seed = 1;
  /// sat | fixed-sat | unique-sat | vc | strips | plansat
  std::string problem = "sat";
  std::size_t variables = 4;
  std::size_t clauses = 6;
  std::size_t max_clause_size = 3;
  std::size_t conditions = 6;
  std::size_t operators = 6;
  std::size_t candidates = 4;
  std::size_t bound = 2;
  std::size_t trials = 20;
  bool verify = false;
  std::size_t oracle_limit = kDefaultOracleLimit;

  /// Throws InvalidConfig naming the offending field.
  void validate() const;
};

const std::vector<std::string>& experiment_problems();

struct ExperimentRow {
  std::size_t trial_id = 0;
  std::string problem;
  std::string change_id;
  bool cold_verdict = false;
  bool hinted_verdict = false;
  std::uint64_t cold_work = 0;
  std::uint64_t hinted_work = 0;
  bool hint_used = false;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::string problem;
  std::vector<ExperimentRow> rows;

  std::size_t hint_used_count() const;
  double hint_success_rate() const;
};

/// Throws Counterexample when a hinted verdict disagrees with the cold one
/// or a hinted solution fails validation.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

/// (file name, contents) pairs in the module formats: DIMACS for sat, gadget
/// JSON for vc, instance JSON for strips.
std::vector<std::pair<std::string, std::string>> generate_instances(const ExperimentConfig& config);

}  // namespace reopt
