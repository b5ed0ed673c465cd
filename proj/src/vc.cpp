#include "reopt/vc.hpp"

#include <algorithm>
#include <map>

#include "reopt/error.hpp"

namespace reopt {

Edge make_edge(NodeId u, NodeId v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

bool Graph::add_edge(const NodeId& u, const NodeId& v) {
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop on " + u);
  nodes_.insert(u);
  nodes_.insert(v);
  return edges_.insert(make_edge(u, v)).second;
}

bool Graph::remove_edge(const NodeId& u, const NodeId& v) {
  return edges_.erase(make_edge(u, v)) != 0;
}

bool Graph::has_edge(const NodeId& u, const NodeId& v) const {
  return edges_.count(make_edge(u, v)) != 0;
}

std::size_t Graph::degree(const NodeId& n) const {
  std::size_t d = 0;
  for (const auto& [u, v] : edges_)
    if (u == n || v == n) ++d;
  return d;
}

bool is_cover(const Graph& graph, const Cover& candidate) {
  for (const auto& n : candidate)
    if (!graph.has_node(n)) throw Error(ErrorKind::UnknownNode, "node " + n + " not in graph");
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const Edge& e) {
    return candidate.count(e.first) || candidate.count(e.second);
  });
}

MinCover min_cover_brute(const Graph& graph, std::size_t limit) {
  std::set<NodeId> active;
  for (const auto& [u, v] : graph.edges()) {
    active.insert(u);
    active.insert(v);
  }
  if (active.size() > limit || active.size() > 31)
    throw Error(ErrorKind::GraphTooLarge, std::to_string(active.size()) +
                                              " non-isolated nodes exceed oracle limit " +
                                              std::to_string(limit));

  const std::vector<NodeId> names(active.begin(), active.end());
  std::map<NodeId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = int(i);
  std::vector<std::uint32_t> edge_masks;
  for (const auto& [u, v] : graph.edges())
    edge_masks.push_back((1u << index[u]) | (1u << index[v]));

  const int n = int(names.size());
  std::vector<int> pick;
  for (int size = 0; size <= n; ++size) {
    // Combinations of `size` indices in lexicographic order.
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i : pick) mask |= 1u << i;
      bool ok = std::all_of(edge_masks.begin(), edge_masks.end(),
                            [mask](std::uint32_t e) { return (e & mask) != 0; });
      if (ok) {
        MinCover out{std::size_t(size), {}};
        for (int i : pick) out.witness.insert(names[i]);
        return out;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};  // unreachable: the full active set is always a cover
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& graph, CoverStats& stats)
      : names_(graph.nodes().begin(), graph.nodes().end()), stats_(stats) {
    std::map<NodeId, int> index;
    for (std::size_t i = 0; i < names_.size(); ++i) index[names_[i]] = int(i);
    adjacency_.resize(names_.size());
    for (const auto& [u, v] : graph.edges()) {
      adjacency_[index[u]].push_back(index[v]);
      adjacency_[index[v]].push_back(index[u]);
    }
    in_cover_.assign(names_.size(), false);
  }

  std::optional<Cover> run(std::size_t budget) {
    if (!search(budget)) return std::nullopt;
    Cover out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (in_cover_[i]) out.insert(names_[i]);
    return out;
  }

 private:
  std::size_t residual_degree(int v) const {
    std::size_t d = 0;
    for (int w : adjacency_[v])
      if (!in_cover_[w]) ++d;
    return d;
  }

  bool search(std::size_t budget) {
    ++stats_.nodes_explored;
    int best = -1;
    std::size_t best_degree = 0;
    std::size_t uncovered = 0;
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (in_cover_[v]) continue;
      std::size_t d = residual_degree(int(v));
      uncovered += d;
      if (d > best_degree) {
        best_degree = d;
        best = int(v);
      }
    }
    uncovered /= 2;
    if (uncovered == 0) return true;
    if (budget == 0 || uncovered > budget * best_degree) return false;

    in_cover_[best] = true;
    if (search(budget - 1)) return true;
    in_cover_[best] = false;

    std::vector<int> neighbours;
    for (int w : adjacency_[best])
      if (!in_cover_[w]) neighbours.push_back(w);
    if (neighbours.size() > budget) return false;
    for (int w : neighbours) in_cover_[w] = true;
    if (search(budget - neighbours.size())) return true;
    for (int w : neighbours) in_cover_[w] = false;
    return false;
  }

  std::vector<NodeId> names_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<bool> in_cover_;
  CoverStats& stats_;
};

}  // namespace

std::optional<Cover> decide_cover(const Graph& graph, CoverBudget budget, CoverStats* stats) {
  CoverStats local;
  return CoverSearch(graph, stats ? *stats : local).run(budget.k);
}

std::optional<Cover> warm_start_cover(const Graph& graph, const Cover& old_cover,
                                      const std::set<Edge>& added_edges, CoverBudget budget,
                                      bool* hint_used, CoverStats* stats) {
  Graph before = graph;
  for (const auto& [u, v] : added_edges) before.remove_edge(u, v);
  for (const auto& n : old_cover)
    if (!graph.has_node(n)) throw Error(ErrorKind::InvalidHint, "hint names unknown node " + n);
  if (!is_cover(before, old_cover))
    throw Error(ErrorKind::InvalidHint, "hint does not cover the graph before the change");

  bool fast = old_cover.size() <= budget.k &&
              std::all_of(added_edges.begin(), added_edges.end(), [&](const Edge& e) {
                return old_cover.count(e.first) || old_cover.count(e.second);
              });
  if (hint_used) *hint_used = fast;
  if (fast) return old_cover;
  return decide_cover(graph, budget, stats);
}

}  // namespace reopt
