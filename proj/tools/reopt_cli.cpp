// reopt: command-line front end for the reoptimization library.
//
//   reopt generate     seeded random instances in the library formats
//   reopt reduce       run a reduction on an input file
//   reopt solve        solve a CNF, graph, gadget or planning instance
//   reopt mutate       apply a change to an instance
//   reopt verify       oracle-equivalence sweeps
//   reopt experiment   cold-versus-hinted solving, CSV or JSON report
//   reopt export-dot   render a gadget file as DOT
//
// Exit codes: 0 success, 1 usage, 2 verification counterexample,
// 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reopt/error.hpp"
#include "reopt/formats.hpp"
#include "reopt/gadget.hpp"
#include "reopt/harness.hpp"
#include "reopt/hint.hpp"
#include "reopt/plan_reductions.hpp"
#include "reopt/sat_reductions.hpp"

namespace fs = std::filesystem;
using namespace reopt;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidConfig, "out: cannot write '" + g.out + "'");
  out << text;
}

Literal parse_literal(int lit) { return Literal::from_dimacs(lit); }

json assignment_json(const Assignment& a) {
  return std::vector<Var>(a.true_vars().begin(), a.true_vars().end());
}

std::string model_lines(const CnfFormula& f, const std::optional<Assignment>& model) {
  if (!model) return "s UNSATISFIABLE\n";
  std::string out = "s SATISFIABLE\nv";
  for (Var v : f.alphabet()) out += " " + std::to_string(model->value(v) ? int(v) : -int(v));
  return out + " 0\n";
}

enum class FileKind { Cnf, Instance, Gadget, EdgeList };

FileKind detect(const std::string& path, const std::string& text) {
  auto ext = fs::path(path).extension().string();
  if (ext == ".cnf" || ext == ".dimacs") return FileKind::Cnf;
  if (ext == ".json") {
    json j = json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("operators")) return FileKind::Instance;
    if (j.is_object() && j.contains("edges")) return FileKind::Gadget;
    throw Error(ErrorKind::Parse, "'" + path + "' is neither a planning instance nor a gadget");
  }
  return FileKind::EdgeList;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  ExperimentConfig config;
};

void run_generate(const Globals& g, GenerateArgs args) {
  args.config.seed = g.seed;
  auto files = generate_instances(args.config);
  if (g.out.empty()) {
    for (const auto& [name, text] : files) {
      if (files.size() > 1) std::cout << "== " << name << " ==\n";
      std::cout << text;
    }
    return;
  }
  fs::create_directories(g.out);
  for (const auto& [name, text] : files) {
    std::ofstream out(fs::path(g.out) / name, std::ios::binary);
    out << text;
  }
}

struct ReduceArgs {
  std::string kind;
  std::string in;
  std::size_t variables = 3;
};

void run_reduce(const Globals& g, const ReduceArgs& a) {
  auto need_input = [&] {
    if (a.in.empty()) throw Error(ErrorKind::InvalidConfig, "in: required for " + a.kind);
    return read_file(a.in);
  };
  if (a.kind == "fixed-model") {
    auto r = reduce_fixed_model(parse_dimacs(need_input()));
    json j = {{"formula", write_dimacs(r.formula)},
              {"change", write_change_set(ChangeSet::add(r.change_clause))},
              {"hint", assignment_json(r.hint_model)},
              {"fresh", r.fresh}};
    emit(g, j.dump(2) + "\n");
  } else if (a.kind == "unique-model") {
    auto r = reduce_unique_model(parse_dimacs(need_input()));
    json j = {{"formula", write_dimacs(r.formula)},
              {"change", write_change_set(r.change())},
              {"fresh", r.fresh}};
    emit(g, j.dump(2) + "\n");
  } else if (a.kind == "nsat") {
    auto r = make_nsat_instance(parse_dimacs(need_input()));
    emit(g, json({{"unary", r.unary_part}, {"formula", write_dimacs(r.formula)}}).dump(2) + "\n");
  } else if (a.kind == "gadget") {
    emit(g, write_gadget_json(build_gadget(parse_dimacs(need_input()))));
  } else if (a.kind == "full-gadget") {
    std::set<Var> alphabet;
    for (Var v = 1; v <= a.variables; ++v) alphabet.insert(v);
    emit(g, write_gadget_json(build_full_gadget(alphabet)));
  } else if (a.kind == "replanning") {
    auto r = sat_to_replanning(parse_dimacs(need_input()));
    json j = {{"instance", json::parse(write_instance_json(r.instance))},
              {"original_plan", r.original_plan.steps},
              {"change",
               {{"add", std::vector<std::string>(r.change.add.begin(), r.change.add.end())},
                {"remove", std::vector<std::string>(r.change.remove.begin(), r.change.remove.end())}}}};
    emit(g, j.dump(2) + "\n");
  } else if (a.kind == "goal-compilation") {
    auto r = goal_compilation(parse_instance_json(need_input()));
    if (r.renamed)
      std::cerr << "note: default names taken; using " << r.goal_condition << "/" << r.goal_operator
                << "\n";
    emit(g, write_instance_json(r.instance));
  } else {
    throw Error(ErrorKind::InvalidConfig, "kind: unknown reduction '" + a.kind + "'");
  }
}

struct SolveArgs {
  std::string in;
  std::string solver = "dpll";
  long budget = -1;
};

void run_solve(const Globals& g, const SolveArgs& a) {
  const std::string text = read_file(a.in);
  switch (detect(a.in, text)) {
    case FileKind::Cnf: {
      auto f = parse_dimacs(text);
      if (a.solver != "dpll" && a.solver != "brute")
        throw Error(ErrorKind::InvalidConfig, "solver: expected dpll or brute");
      auto model = a.solver == "brute" ? solve_brute(f, g.oracle_limit) : solve_dpll(f);
      emit(g, model_lines(f, model));
      break;
    }
    case FileKind::Instance: {
      auto plan = plan_exists(parse_instance_json(text));
      emit(g, plan ? "plan " + to_string(*plan) + "\n" : std::string("no plan\n"));
      break;
    }
    case FileKind::Gadget:
    case FileKind::EdgeList: {
      Graph graph;
      std::size_t k = 0;
      if (detect(a.in, text) == FileKind::Gadget) {
        auto gadget = parse_gadget_json(text);
        graph = gadget.graph;
        k = gadget.budget.k;
      } else {
        graph = parse_edge_list(text);
      }
      if (a.budget >= 0) k = std::size_t(a.budget);
      std::string out;
      if (a.budget < 0 && detect(a.in, text) == FileKind::EdgeList) {
        auto best = min_cover_brute(graph);
        out = "min cover " + std::to_string(best.size) + ":";
        for (const auto& n : best.witness) out += " " + n;
      } else {
        auto cover = decide_cover(graph, {k});
        out = cover ? "cover within " + std::to_string(k) + ":" : "no cover within " + std::to_string(k);
        if (cover)
          for (const auto& n : *cover) out += " " + n;
      }
      emit(g, out + "\n");
      break;
    }
  }
}

struct MutateArgs {
  std::string in;
  std::string changes;
  std::vector<int> add_unit;
  std::vector<int> remove_unit;
  std::vector<std::string> add_init;
  std::vector<std::string> remove_init;
};

void run_mutate(const Globals& g, const MutateArgs& a) {
  const std::string text = read_file(a.in);
  switch (detect(a.in, text)) {
    case FileKind::Cnf: {
      if (a.changes.empty()) throw Error(ErrorKind::InvalidConfig, "changes: required for CNF input");
      auto f = parse_dimacs(text);
      auto changes = parse_change_set(read_file(a.changes));
      std::vector<Clause> missing;
      auto out = apply_changes(f, changes, &missing);
      for (const auto& c : missing) std::cerr << "warning: deleted clause " << to_string(c) << " was absent\n";
      if (!is_alphabet_preserving(f, changes)) std::cerr << "note: change extends the alphabet\n";
      emit(g, write_dimacs(out));
      break;
    }
    case FileKind::Gadget: {
      auto gadget = parse_gadget_json(text);
      for (int l : a.remove_unit) gadget = gadget_remove_unit(gadget, parse_literal(l));
      for (int l : a.add_unit) gadget = gadget_add_unit(gadget, parse_literal(l));
      emit(g, write_gadget_json(gadget));
      break;
    }
    case FileKind::Instance: {
      InitialChange change{{a.add_init.begin(), a.add_init.end()},
                           {a.remove_init.begin(), a.remove_init.end()}};
      emit(g, write_instance_json(apply_initial_change(parse_instance_json(text), change)));
      break;
    }
    case FileKind::EdgeList:
      throw Error(ErrorKind::InvalidConfig, "in: edge lists have no mutation operations");
  }
}

struct VerifyArgs {
  std::string suite;
  long corrupt_gadget_budget = 0;
  VerifyOptions opts;
};

int run_verify(const Globals& g, VerifyArgs a) {
  if (a.suite.empty()) {
    std::cerr << "usage: reopt verify <suite>; suites:";
    for (const auto& s : verify_suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return kExitUsage;
  }
  a.opts.seed = g.seed;
  a.opts.oracle_limit = g.oracle_limit;
  a.opts.gadget_budget_offset = a.corrupt_gadget_budget;
  bool ok = true;
  std::ostringstream out;
  for (const auto& r : verify_suite(a.suite, a.opts)) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " time=" << r.seconds
        << "s\n";
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << "\n";
    ok = ok && r.passed();
  }
  emit(g, out.str());
  return ok ? 0 : kExitCounterexample;
}

void run_experiment_cmd(const Globals& g, ExperimentConfig config) {
  config.seed = g.seed;
  config.oracle_limit = g.oracle_limit;
  if (g.format != "csv" && g.format != "json")
    throw Error(ErrorKind::InvalidConfig, "format: expected csv or json");
  auto report = run_experiment(config);
  emit(g, g.format == "json" ? report_json(report) : report_csv(report));
}

void run_export_dot(const Globals& g, const std::string& in) {
  emit(g, gadget_to_dot(parse_gadget_json(read_file(in))));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reoptimization laboratory: reductions, solvers and hint reuse"};
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--format", globals.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--oracle-limit", globals.oracle_limit, "Variable cap for brute-force oracles")
      ->capture_default_str();
  app.add_option("--out", globals.out, "Output file (directory for generate)");

  ExperimentConfig gen_config;
  auto* generate = app.add_subcommand("generate", "Write seeded random instances");
  generate->add_option("--problem", gen_config.problem, "sat | vc | strips | plansat")->capture_default_str();
  generate->add_option("--variables", gen_config.variables)->capture_default_str();
  generate->add_option("--clauses", gen_config.clauses)->capture_default_str();
  generate->add_option("--max-clause-size", gen_config.max_clause_size)->capture_default_str();
  generate->add_option("--conditions", gen_config.conditions)->capture_default_str();
  generate->add_option("--operators", gen_config.operators)->capture_default_str();
  generate->add_option("--count", gen_config.trials, "Number of instances")->capture_default_str();
  gen_config.trials = 1;

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->add_option("kind", reduce_args.kind,
                     "fixed-model | unique-model | nsat | gadget | full-gadget | replanning | "
                     "goal-compilation")
      ->required();
  reduce->add_option("--in", reduce_args.in, "Input file");
  reduce->add_option("--variables", reduce_args.variables, "Alphabet size for full-gadget");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--in", solve_args.in)->required();
  solve->add_option("--solver", solve_args.solver, "dpll | brute")->capture_default_str();
  solve->add_option("--budget", solve_args.budget, "Cover budget for graphs");

  MutateArgs mutate_args;
  auto* mutate = app.add_subcommand("mutate", "Apply a change to an instance");
  mutate->add_option("--in", mutate_args.in)->required();
  mutate->add_option("--changes", mutate_args.changes, "Change-set file for CNF input");
  mutate->add_option("--add-unit", mutate_args.add_unit, "DIMACS literal to add as a unit (gadget)");
  mutate->add_option("--remove-unit", mutate_args.remove_unit, "DIMACS literal unit to remove (gadget)");
  mutate->add_option("--add-init", mutate_args.add_init, "Condition to add to the initial state");
  mutate->add_option("--remove-init", mutate_args.remove_init, "Condition to remove from the initial state");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run oracle-equivalence sweeps");
  verify->add_option("suite", verify_args.suite,
                     "sat-reductions | vc-gadget | plan-reductions | hint-tables | solvers | formats | all");
  verify->add_option("--corrupt-gadget-budget", verify_args.corrupt_gadget_budget,
                     "Offset every gadget budget (mutation testing)");
  verify->add_option("--random-gadgets", verify_args.opts.random_gadget_formulas)->capture_default_str();

  ExperimentConfig exp_config;
  auto* experiment = app.add_subcommand("experiment", "Compare cold and hinted solving");
  experiment->add_option("--problem", exp_config.problem,
                         "sat | sat-table | fixed-sat | unique-sat | vc | strips | plansat")
      ->capture_default_str();
  experiment->add_option("--trials", exp_config.trials)->capture_default_str();
  experiment->add_option("--variables", exp_config.variables)->capture_default_str();
  experiment->add_option("--clauses", exp_config.clauses)->capture_default_str();
  experiment->add_option("--max-clause-size", exp_config.max_clause_size)->capture_default_str();
  experiment->add_option("--conditions", exp_config.conditions)->capture_default_str();
  experiment->add_option("--operators", exp_config.operators)->capture_default_str();
  experiment->add_option("--candidates", exp_config.candidates)->capture_default_str();
  experiment->add_option("--bound", exp_config.bound)->capture_default_str();
  experiment->add_flag("--verify", exp_config.verify, "Cross-check cold verdicts with the oracle");

  std::string dot_in;
  auto* export_dot = app.add_subcommand("export-dot", "Render a gadget file as DOT");
  export_dot->add_option("--in", dot_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) run_generate(globals, {gen_config});
    if (*reduce) run_reduce(globals, reduce_args);
    if (*solve) run_solve(globals, solve_args);
    if (*mutate) run_mutate(globals, mutate_args);
    if (*verify) return run_verify(globals, verify_args);
    if (*experiment) run_experiment_cmd(globals, exp_config);
    if (*export_dot) run_export_dot(globals, dot_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Counterexample: return kExitCounterexample;
      case ErrorKind::BudgetExceeded:
      case ErrorKind::AlphabetTooLarge:
      case ErrorKind::GraphTooLarge: return kExitBudget;
      default: return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
