// Python bindings. Formulas cross the boundary as DIMACS-style integer
// lists, models as sorted lists of true variables, planning instances and
// gadgets as the library's JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reopt/error.hpp"
#include "reopt/formats.hpp"
#include "reopt/gadget.hpp"
#include "reopt/harness.hpp"
#include "reopt/hint.hpp"
#include "reopt/plan_reductions.hpp"
#include "reopt/sat_reductions.hpp"

namespace py = pybind11;
using namespace reopt;

namespace {

using ClauseList = std::vector<std::vector<int>>;

CnfFormula make_formula(const ClauseList& clauses, Var variables) {
  CnfFormula f;
  for (Var v = 1; v <= variables; ++v) f.declare(v);
  for (const auto& c : clauses) f.add_clause(Clause::from_dimacs(c));
  return f;
}

ClauseList clause_list(const CnfFormula& f) {
  ClauseList out;
  for (const auto& c : f.clauses()) {
    std::vector<int> lits;
    for (const auto& l : c.literals()) lits.push_back(l.to_dimacs());
    out.push_back(lits);
  }
  return out;
}

std::vector<int> dimacs_clause(const Clause& c) {
  std::vector<int> out;
  for (const auto& l : c.literals()) out.push_back(l.to_dimacs());
  return out;
}

std::optional<std::vector<Var>> model_list(const std::optional<Assignment>& a) {
  if (!a) return std::nullopt;
  return std::vector<Var>(a->true_vars().begin(), a->true_vars().end());
}

ChangeSet make_changes(const ClauseList& add, const ClauseList& remove) {
  ChangeSet c;
  for (const auto& x : add) c.additions.push_back(Clause::from_dimacs(x));
  for (const auto& x : remove) c.deletions.push_back(Clause::from_dimacs(x));
  return c;
}

}  // namespace

PYBIND11_MODULE(reopt, m) {
  m.doc() = "Reoptimization laboratory: SAT, vertex cover and STRIPS reductions with hint reuse";

  static py::exception<Error> error(m, "ReoptError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CnfFormula>(m, "Formula")
      .def(py::init(&make_formula), py::arg("clauses"), py::arg("variables") = 0)
      .def_static("from_dimacs", [](const std::string& text) { return parse_dimacs(text); })
      .def("to_dimacs", [](const CnfFormula& f) { return write_dimacs(f); })
      .def_property_readonly("clauses", &clause_list)
      .def_property_readonly("alphabet", [](const CnfFormula& f) {
        return std::vector<Var>(f.alphabet().begin(), f.alphabet().end());
      })
      .def("evaluate", [](const CnfFormula& f, const std::vector<Var>& true_vars) {
        return evaluate(f, Assignment(std::set<Var>(true_vars.begin(), true_vars.end())));
      })
      .def("apply_changes", [](const CnfFormula& f, const ClauseList& add, const ClauseList& remove) {
        return apply_changes(f, make_changes(add, remove));
      }, py::arg("add") = ClauseList{}, py::arg("remove") = ClauseList{})
      .def("__eq__", [](const CnfFormula& a, const CnfFormula& b) { return a == b; })
      .def("__len__", &CnfFormula::size)
      .def("__repr__", [](const CnfFormula& f) { return "Formula(" + to_string(f) + ")"; });

  m.def("solve_brute", [](const CnfFormula& f, std::size_t limit) { return model_list(solve_brute(f, limit)); },
        py::arg("formula"), py::arg("limit") = kDefaultOracleLimit);
  m.def("solve_dpll", [](const CnfFormula& f) { return model_list(solve_dpll(f)); });
  m.def("count_models", [](const CnfFormula& f) { return count_models(f); });

  m.def("reduce_fixed_model", [](const CnfFormula& g) {
    auto r = reduce_fixed_model(g);
    py::dict d;
    d["formula"] = r.formula;
    d["change_clause"] = dimacs_clause(r.change_clause);
    d["hint"] = *model_list(r.hint_model);
    d["fresh"] = r.fresh;
    return d;
  });
  m.def("reduce_unique_model", [](const CnfFormula& g) {
    auto r = reduce_unique_model(g);
    py::dict d;
    d["formula"] = r.formula;
    d["add_clause"] = dimacs_clause(r.add_clause);
    d["del_clause"] = dimacs_clause(r.del_clause);
    d["fresh"] = r.fresh;
    return d;
  });

  py::class_<Gadget>(m, "Gadget")
      .def_property_readonly("budget", [](const Gadget& g) { return g.budget.k; })
      .def_property_readonly("nodes", [](const Gadget& g) {
        return std::vector<NodeId>(g.graph.nodes().begin(), g.graph.nodes().end());
      })
      .def_property_readonly("edges", [](const Gadget& g) {
        return std::vector<Edge>(g.graph.edges().begin(), g.graph.edges().end());
      })
      .def_property_readonly("source", [](const Gadget& g) { return g.source; })
      .def("add_unit", [](const Gadget& g, int lit) { return gadget_add_unit(g, Literal::from_dimacs(lit)); })
      .def("remove_unit", [](const Gadget& g, int lit) { return gadget_remove_unit(g, Literal::from_dimacs(lit)); })
      .def("min_cover", [](const Gadget& g) {
        auto c = min_cover_brute(g.graph);
        return std::make_pair(c.size, std::vector<NodeId>(c.witness.begin(), c.witness.end()));
      })
      .def("has_cover", [](const Gadget& g) { return decide_cover(g.graph, g.budget).has_value(); })
      .def("to_json", [](const Gadget& g) { return write_gadget_json(g); })
      .def_static("from_json", [](const std::string& text) { return parse_gadget_json(text); })
      .def("to_dot", [](const Gadget& g) { return gadget_to_dot(g); });
  m.def("build_gadget", &build_gadget);

  m.def("plan_exists", [](const std::string& instance_json) -> std::optional<std::vector<std::string>> {
    auto plan = plan_exists(parse_instance_json(instance_json));
    if (!plan) return std::nullopt;
    return plan->steps;
  });
  m.def("validate_plan", [](const std::string& instance_json, const std::vector<std::string>& steps) {
    return validate_plan(parse_instance_json(instance_json), Plan{steps});
  });
  m.def("sat_to_replanning", [](const CnfFormula& f) {
    auto rc = sat_to_replanning(f);
    py::dict d;
    d["instance"] = write_instance_json(rc.instance);
    d["changed"] = write_instance_json(apply_initial_change(rc));
    d["original_plan"] = rc.original_plan.steps;
    return d;
  });
  m.def("goal_compilation", [](const std::string& instance_json) {
    return write_instance_json(goal_compilation(parse_instance_json(instance_json)).instance);
  });
  m.def("count_irredundant_plans", [](const std::string& instance_json) {
    return count_irredundant_plans(parse_instance_json(instance_json));
  });

  m.def("compile_table", [](const CnfFormula& base, const ClauseList& add, const ClauseList& remove,
                            std::size_t bound) {
    std::vector<ElementaryChange> cands;
    for (const auto& c : add) cands.push_back({ElementaryChange::Kind::Add, Clause::from_dimacs(c)});
    for (const auto& c : remove) cands.push_back({ElementaryChange::Kind::Delete, Clause::from_dimacs(c)});
    return write_hint_table(compile_table(base, cands, bound));
  }, py::arg("base"), py::arg("add") = ClauseList{}, py::arg("remove") = ClauseList{}, py::arg("bound") = 1);
  m.def("lookup", [](const std::string& table_json, const ClauseList& add, const ClauseList& remove) -> py::object {
    auto r = lookup(parse_hint_table(table_json), make_changes(add, remove));
    if (!r.hit) return py::str("miss");
    if (!r.solution) return py::none();
    return py::cast(*model_list(r.solution));
  }, py::arg("table"), py::arg("add") = ClauseList{}, py::arg("remove") = ClauseList{});
  m.def("reuse_model", [](const CnfFormula& f, const ClauseList& add, const ClauseList& remove,
                          const std::vector<Var>& hint) {
    auto r = reuse_model(f, make_changes(add, remove), Assignment(std::set<Var>(hint.begin(), hint.end())));
    py::dict d;
    d["solution"] = model_list(r.solution);
    d["hint_used"] = r.hint_used;
    d["work_units"] = r.work_units;
    return d;
  }, py::arg("formula"), py::arg("add") = ClauseList{}, py::arg("remove") = ClauseList{}, py::arg("hint"));

  m.def("run_experiment", [](const std::string& problem, std::size_t trials, std::uint64_t seed,
                             const std::string& format) {
    ExperimentConfig c;
    c.problem = problem;
    c.trials = trials;
    c.seed = seed;
    auto report = run_experiment(c);
    return format == "json" ? report_json(report) : report_csv(report);
  }, py::arg("problem"), py::arg("trials") = 20, py::arg("seed") = 1, py::arg("format") = "csv");
  m.def("verify", [](const std::string& suite, std::uint64_t seed) {
    VerifyOptions o;
    o.seed = seed;
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& r : verify_suite(suite, o)) out.emplace_back(r.name, r.counterexamples);
    return out;
  }, py::arg("suite"), py::arg("seed") = 1);
}
