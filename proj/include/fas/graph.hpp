#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fas {

using VertexId = std::uint32_t;

/// Undirected edge stored with first < second.
struct Edge {
  VertexId first;
  VertexId second;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on dense vertex ids [0, order).
///
/// Immutable after construction. Edges are normalized (smaller endpoint first)
/// and kept sorted; neighbor lists are sorted ascending so iteration order is
/// deterministic everywhere. Labels are metadata only and never affect
/// equality of structure-dependent results.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws InputError on self-loops, duplicate edges or endpoints >= order.
  SimpleGraph(std::size_t order, std::span<const Edge> edges,
              std::map<VertexId, std::string> labels = {});
  SimpleGraph(std::size_t order,
              std::initializer_list<std::pair<VertexId, VertexId>> edges);

  static SimpleGraph complete(std::size_t order);
  static SimpleGraph path(std::size_t order);
  static SimpleGraph complete_bipartite(std::size_t left, std::size_t right);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  /// Sorted ascending. Throws InputError when v >= order().
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// O(1); false for out-of-range ids.
  bool adjacent(VertexId u, VertexId v) const;

  /// Structural equality plus labels.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.edges_ == b.edges_ && a.order() == b.order() &&
           a.labels_ == b.labels_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint64_t> matrix_;  // row-major bitset, row_words_ per row
  std::size_t row_words_ = 0;
  std::map<VertexId, std::string> labels_;
};

std::vector<VertexId> neighbors(const SimpleGraph& g, VertexId v);

/// 0 for edgeless graphs.
std::size_t max_degree(const SimpleGraph& g);

inline constexpr std::size_t kDefaultPlanarityCap = 256;

/// Planarity for small graphs. Throws ResourceLimitError when the order
/// exceeds `cap`; that means "unverified", not "non-planar".
bool is_planar_small(const SimpleGraph& g,
                     std::size_t cap = kDefaultPlanarityCap);

/// Graphviz export. `fill_colors`, if non-empty, gives one fill color name per
/// vertex; `names` optionally overrides the node captions.
std::string to_dot(const SimpleGraph& g,
                   std::span<const std::string> fill_colors = {},
                   std::span<const std::string> names = {},
                   const std::string& graph_name = "G");

}  // namespace fas
