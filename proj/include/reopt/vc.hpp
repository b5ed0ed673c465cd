#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reopt {

using NodeId = std::string;
/// Unordered edge, stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

Edge make_edge(NodeId u, NodeId v);

class Graph {
 public:
  void add_node(const NodeId& n) { nodes_.insert(n); }
  /// Adds missing endpoints. Throws SelfLoop for u == v.
  bool add_edge(const NodeId& u, const NodeId& v);
  bool remove_edge(const NodeId& u, const NodeId& v);
  bool has_node(const NodeId& n) const { return nodes_.count(n) != 0; }
  bool has_edge(const NodeId& u, const NodeId& v) const;

  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t degree(const NodeId& n) const;

  bool operator==(const Graph&) const = default;

 private:
  std::set<NodeId> nodes_;
  std::set<Edge> edges_;
};

using Cover = std::set<NodeId>;

struct CoverBudget {
  std::size_t k = 0;
};

struct MinCover {
  std::size_t size = 0;
  Cover witness;
};

struct CoverStats {
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultCoverOracleLimit = 24;

/// Throws UnknownNode if the candidate names a node outside the graph.
bool is_cover(const Graph& graph, const Cover& candidate);

/// Exhaustive minimum cover: candidate sets are enumerated by increasing size
/// in lexicographic order, so the witness is the lexicographically least
/// minimum cover. Isolated nodes never belong to a minimum cover and are
/// excluded up front; `limit` bounds the number of non-isolated nodes.
MinCover min_cover_brute(const Graph& graph, std::size_t limit = kDefaultCoverOracleLimit);

/// Branch and bound: branch on the highest-degree vertex v of the remaining
/// graph (v in the cover, or all of N(v) in the cover).
std::optional<Cover> decide_cover(const Graph& graph, CoverBudget budget,
                                  CoverStats* stats = nullptr);

/// Returns `old_cover` when it already covers the added edges within budget,
/// otherwise solves from scratch. Throws InvalidHint when `old_cover` does
/// not cover the graph without `added_edges`.
std::optional<Cover> warm_start_cover(const Graph& graph, const Cover& old_cover,
                                      const std::set<Edge>& added_edges, CoverBudget budget,
                                      bool* hint_used = nullptr, CoverStats* stats = nullptr);

}  // namespace reopt
