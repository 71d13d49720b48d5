#include "fas/graph.hpp"

#include <algorithm>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fas/errors.hpp"

namespace fas {

SimpleGraph::SimpleGraph(std::size_t order, std::span<const Edge> edges,
                         std::map<VertexId, std::string> labels)
    : adjacency_(order),
      row_words_((order + 63) / 64),
      labels_(std::move(labels)) {
  matrix_.assign(order * row_words_, 0);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.first >= order || e.second >= order) {
      throw InputError("edge endpoint out of range: {" +
                       std::to_string(e.first) + "," +
                       std::to_string(e.second) + "} with order " +
                       std::to_string(order));
    }
    if (e.first == e.second) {
      throw InputError("self-loop at vertex " + std::to_string(e.first));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
    matrix_[e.first * row_words_ + e.second / 64] |= 1ULL << (e.second % 64);
    matrix_[e.second * row_words_ + e.first / 64] |= 1ULL << (e.first % 64);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  for (const auto& [v, _] : labels_) {
    if (v >= order) {
      throw InputError("label for out-of-range vertex " + std::to_string(v));
    }
  }
}

SimpleGraph::SimpleGraph(
    std::size_t order,
    std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : SimpleGraph(order, [&] {
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.push_back({u, v});
        return es;
      }()) {}

SimpleGraph SimpleGraph::complete(std::size_t order) {
  std::vector<Edge> es;
  for (VertexId u = 0; u < order; ++u)
    for (VertexId v = u + 1; v < order; ++v) es.push_back({u, v});
  return SimpleGraph(order, es);
}

SimpleGraph SimpleGraph::path(std::size_t order) {
  std::vector<Edge> es;
  for (VertexId u = 0; u + 1 < order; ++u) es.push_back({u, u + 1});
  return SimpleGraph(order, es);
}

SimpleGraph SimpleGraph::complete_bipartite(std::size_t left,
                                            std::size_t right) {
  std::vector<Edge> es;
  for (VertexId u = 0; u < left; ++u)
    for (VertexId v = 0; v < right; ++v)
      es.push_back({u, static_cast<VertexId>(left + v)});
  return SimpleGraph(left + right, es);
}

std::span<const VertexId> SimpleGraph::neighbors(VertexId v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (order " +
                     std::to_string(order()) + ")");
  }
  return adjacency_[v];
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  return (matrix_[u * row_words_ + v / 64] >> (v % 64)) & 1U;
}

std::vector<VertexId> neighbors(const SimpleGraph& g, VertexId v) {
  auto nb = g.neighbors(v);
  return {nb.begin(), nb.end()};
}

std::size_t max_degree(const SimpleGraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_planar_small(const SimpleGraph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw ResourceLimitError("planarity check capped at order " +
                             std::to_string(cap) + ", graph has " +
                             std::to_string(g.order()));
  }
  // Cheap Euler bound first; Boyer-Myrvold for the rest.
  if (g.order() >= 3 && g.edge_count() > 3 * g.order() - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (const Edge& e : g.edges()) boost::add_edge(e.first, e.second, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::string to_dot(const SimpleGraph& g, std::span<const std::string> fill_colors,
                   std::span<const std::string> names,
                   const std::string& graph_name) {
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  out << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"";
    if (v < names.size()) {
      out << names[v];
    } else if (auto it = g.labels().find(v); it != g.labels().end()) {
      out << it->second;
    } else {
      out << v;
    }
    out << "\"";
    if (v < fill_colors.size()) out << ", fillcolor=\"" << fill_colors[v] << "\"";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fas
