#include "reopt/formats.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "reopt/error.hpp"

namespace reopt {

using nlohmann::json;

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
}

std::string clause_dimacs(const Clause& c) {
  std::string out;
  for (const auto& l : c.literals()) out += std::to_string(l.to_dimacs()) + " ";
  return out + "0";
}

Clause parse_clause_tokens(const std::vector<std::string>& toks, std::size_t first,
                           std::size_t line_no) {
  if (toks.size() <= first || toks.back() != "0")
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": clause must end with 0");
  std::vector<int> lits;
  for (std::size_t i = first; i + 1 < toks.size(); ++i) {
    int v = parse_int(toks[i], line_no);
    if (v == 0)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": 0 inside clause");
    lits.push_back(v);
  }
  return Clause::from_dimacs(lits);
}

json string_set(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

std::set<std::string> to_string_set(const json& j) {
  std::set<std::string> out;
  for (const auto& v : j) out.insert(v.get<std::string>());
  return out;
}

template <typename Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string hex_mask(CandidateMask mask) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", unsigned(mask));
  return buf;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  long declared_vars = -1, declared_clauses = -1, seen_clauses = 0;
  std::vector<int> pending;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "cnf" || declared_vars >= 0)
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad header");
      declared_vars = parse_int(toks[2], line_no);
      declared_clauses = parse_int(toks[3], line_no);
      if (declared_vars < 0 || declared_clauses < 0)
        throw Error(ErrorKind::Parse, "negative counts in header");
      for (long v = 1; v <= declared_vars; ++v) f.declare(Var(v));
      continue;
    }
    if (declared_vars < 0)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": clause before header");
    for (const auto& tok : toks) {
      int v = parse_int(tok, line_no);
      if (std::abs(long(v)) > declared_vars)
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": variable " +
                                          std::to_string(std::abs(v)) + " exceeds header");
      if (v == 0) {
        f.add_clause(Clause::from_dimacs(pending));
        pending.clear();
        ++seen_clauses;
      } else {
        pending.push_back(v);
      }
    }
  }
  if (declared_vars < 0) throw Error(ErrorKind::Parse, "missing 'p cnf' header");
  if (!pending.empty()) throw Error(ErrorKind::Parse, "last clause is not 0-terminated");
  if (seen_clauses != declared_clauses)
    throw Error(ErrorKind::Parse, "header declares " + std::to_string(declared_clauses) +
                                      " clauses, found " + std::to_string(seen_clauses));
  return f;
}

std::string write_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.max_var()) + " " +
                    std::to_string(formula.size()) + "\n";
  for (const auto& c : formula.clauses()) out += clause_dimacs(c) + "\n";
  return out;
}

ChangeSet parse_change_set(std::string_view text) {
  ChangeSet out;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "+")
      out.additions.push_back(parse_clause_tokens(toks, 1, line_no));
    else if (toks[0] == "-")
      out.deletions.push_back(parse_clause_tokens(toks, 1, line_no));
    else
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected '+' or '-'");
  }
  out.validate();
  return out;
}

std::string write_change_set(const ChangeSet& changes) {
  std::string out;
  for (const auto& c : changes.additions) out += "+ " + clause_dimacs(c) + "\n";
  for (const auto& c : changes.deletions) out += "- " + clause_dimacs(c) + "\n";
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() == 1)
      g.add_node(toks[0]);
    else if (toks.size() == 2)
      g.add_edge(toks[0], toks[1]);
    else
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u v'");
  }
  return g;
}

std::string write_edge_list(const Graph& graph) {
  std::string out;
  std::set<NodeId> touched;
  for (const auto& [u, v] : graph.edges()) {
    out += u + " " + v + "\n";
    touched.insert(u);
    touched.insert(v);
  }
  for (const auto& n : graph.nodes())
    if (!touched.count(n)) out += n + "\n";
  return out;
}

StripsInstance parse_instance_json(std::string_view text) {
  auto inst = with_json_errors([&] {
    json j = json::parse(text);
    StripsInstance inst;
    inst.conditions = to_string_set(j.at("conditions"));
    for (const auto& [name, sets] : j.at("operators").items()) {
      if (!sets.is_array() || sets.size() != 4)
        throw Error(ErrorKind::Parse, "operator " + name + " needs four condition arrays");
      inst.operators[name] = {to_string_set(sets[0]), to_string_set(sets[1]),
                              to_string_set(sets[2]), to_string_set(sets[3])};
    }
    inst.initial = to_string_set(j.at("initial"));
    inst.goal.must_true = to_string_set(j.at("goal").at("must_true"));
    inst.goal.must_false = to_string_set(j.at("goal").at("must_false"));
    return inst;
  });
  try {
    inst.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return inst;
}

std::string write_instance_json(const StripsInstance& instance) {
  json ops = json::object();
  for (const auto& [name, op] : instance.operators)
    ops[name] = json::array({string_set(op.pos_pre), string_set(op.neg_pre),
                             string_set(op.pos_post), string_set(op.neg_post)});
  json j = {{"conditions", string_set(instance.conditions)},
            {"operators", ops},
            {"initial", string_set(instance.initial)},
            {"goal",
             {{"must_true", string_set(instance.goal.must_true)},
              {"must_false", string_set(instance.goal.must_false)}}}};
  return j.dump(2) + "\n";
}

HintTable parse_hint_table(std::string_view text) {
  return with_json_errors([&] {
    json j = json::parse(text);
    HintTable t;
    t.base = parse_dimacs(j.at("base").get<std::string>());
    t.bound = j.at("bound").get<std::size_t>();
    for (const auto& c : j.at("candidates")) {
      auto op = c.at("op").get<std::string>();
      if (op != "+" && op != "-") throw Error(ErrorKind::Parse, "candidate op must be + or -");
      t.candidates.push_back({op == "+" ? ElementaryChange::Kind::Add : ElementaryChange::Kind::Delete,
                              Clause::from_dimacs(c.at("clause").get<std::vector<int>>())});
    }
    for (const auto& [key, value] : j.at("entries").items()) {
      std::size_t used = 0;
      unsigned long mask = std::stoul(key, &used, 16);
      if (used != key.size()) throw Error(ErrorKind::Parse, "bad entry key '" + key + "'");
      std::optional<Assignment> model;
      if (!value.is_null()) {
        std::set<Var> vars;
        for (const auto& v : value) vars.insert(v.get<Var>());
        model = Assignment(std::move(vars));
      }
      t.entries.emplace(CandidateMask(mask), std::move(model));
    }
    return t;
  });
}

std::string write_hint_table(const HintTable& table) {
  json candidates = json::array();
  for (const auto& c : table.candidates) {
    std::vector<int> lits;
    for (const auto& l : c.clause.literals()) lits.push_back(l.to_dimacs());
    candidates.push_back({{"op", c.kind == ElementaryChange::Kind::Add ? "+" : "-"}, {"clause", lits}});
  }
  json entries = json::object();
  for (const auto& [mask, model] : table.entries) {
    if (model)
      entries[hex_mask(mask)] = std::vector<Var>(model->true_vars().begin(), model->true_vars().end());
    else
      entries[hex_mask(mask)] = nullptr;
  }
  json j = {{"base", write_dimacs(table.base)},
            {"bound", table.bound},
            {"candidates", candidates},
            {"entries", entries}};
  return j.dump(2) + "\n";
}

Gadget parse_gadget_json(std::string_view text) {
  return with_json_errors([&] {
    json j = json::parse(text);
    Gadget g;
    g.source = parse_dimacs(j.at("source").get<std::string>());
    g.budget.k = j.at("budget").get<std::size_t>();
    g.removals = j.at("removals").get<std::size_t>();
    for (const auto& [name, role] : j.at("nodes").items()) {
      g.graph.add_node(name);
      g.roles[name] = parse_node_role(role.get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
      auto u = e.at(0).get<std::string>(), v = e.at(1).get<std::string>();
      if (!g.graph.has_node(u) || !g.graph.has_node(v))
        throw Error(ErrorKind::Parse, "edge " + u + " " + v + " names an undeclared node");
      g.graph.add_edge(u, v);
    }
    return g;
  });
}

std::string write_gadget_json(const Gadget& gadget) {
  json nodes = json::object();
  for (const auto& n : gadget.graph.nodes()) {
    auto it = gadget.roles.find(n);
    nodes[n] = std::string(to_string(it == gadget.roles.end() ? NodeRole::Literal : it->second));
  }
  json edges = json::array();
  for (const auto& [u, v] : gadget.graph.edges()) edges.push_back({u, v});
  json j = {{"source", write_dimacs(gadget.source)},
            {"budget", gadget.budget.k},
            {"removals", gadget.removals},
            {"nodes", nodes},
            {"edges", edges}};
  return j.dump(2) + "\n";
}

std::string gadget_to_dot(const Gadget& gadget) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  auto style = [](NodeRole role) -> std::string {
    switch (role) {
      case NodeRole::Literal: return "shape=circle, style=filled, fillcolor=lightblue";
      case NodeRole::Prime: return "shape=circle, style=filled, fillcolor=lightgrey";
      case NodeRole::DoublePrime: return "shape=circle, style=filled, fillcolor=white";
      case NodeRole::ClauseMember: return "shape=box, style=filled, fillcolor=khaki";
    }
    return "";
  };

  std::ostringstream out;
  out << "graph gadget {\n";
  out << "  label=" << quote("k = " + std::to_string(gadget.budget.k)) << ";\n";
  for (const auto& n : gadget.graph.nodes()) {
    auto it = gadget.roles.find(n);
    NodeRole role = it == gadget.roles.end() ? NodeRole::Literal : it->second;
    out << "  " << quote(n) << " [" << style(role) << ", role=" << to_string(role) << "];\n";
  }
  for (const auto& [u, v] : gadget.graph.edges()) out << "  " << quote(u) << " -- " << quote(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace reopt
