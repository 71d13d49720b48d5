#include "fas/ncl.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fas/errors.hpp"
#include "fas/state_store.hpp"

namespace fas::ncl {

std::string_view to_string(VertexKind k) {
  return k == VertexKind::And ? "AND" : "OR";
}

NclGraph::NclGraph(std::vector<VertexKind> kinds, std::vector<NclEdge> edges)
    : kinds_(std::move(kinds)), edges_(std::move(edges)) {
  const std::size_t n = kinds_.size();
  incident_.assign(n, {});
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    const NclEdge& ed = edges_[e];
    const std::string where = "edge " + std::to_string(e);
    if (ed.u >= n || ed.v >= n) throw InputError(where + ": endpoint out of range");
    if (ed.u == ed.v) throw InputError(where + ": loops are not allowed");
    if (ed.weight != 1 && ed.weight != 2) {
      throw InputError(where + ": weight must be 1 or 2");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    const std::string where = "vertex " + std::to_string(v);
    if (incident_[v].size() != 3) {
      throw InputError(where + " has degree " +
                       std::to_string(incident_[v].size()) + ", expected 3");
    }
    std::array<int, 3> w{};
    for (int i = 0; i < 3; ++i) w[i] = edges_[incident_[v][i]].weight;
    std::sort(w.begin(), w.end());
    if (kinds_[v] == VertexKind::Or && w != std::array{2, 2, 2}) {
      throw InputError(where + ": OR vertex needs incident weights {2,2,2}");
    }
    if (kinds_[v] == VertexKind::And && w != std::array{1, 1, 2}) {
      throw InputError(where + ": AND vertex needs incident weights {2,1,1}");
    }
  }
}

SimpleGraph NclGraph::skeleton() const {
  std::vector<Edge> es;
  for (const NclEdge& e : edges_) {
    es.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return SimpleGraph(kinds_.size(), es);
}

std::optional<bool> planarity_flag(const NclGraph& g) {
  const SimpleGraph s = g.skeleton();
  if (s.order() > kDefaultPlanarityCap) return std::nullopt;
  return is_planar_small(s);
}

Orientation Orientation::from_bits(std::uint64_t bits, std::size_t edge_count) {
  std::vector<bool> b(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) b[e] = (bits >> e) & 1U;
  return Orientation(std::move(b));
}

namespace {

void check_arity(const NclGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw InputError("orientation has " + std::to_string(o.size()) +
                     " entries but the graph has " +
                     std::to_string(g.edge_count()) + " edges");
  }
}

}  // namespace

int in_weight(const NclGraph& g, const Orientation& o, VertexId v) {
  int sum = 0;
  for (std::uint32_t e : g.incident(v)) {
    if (o.head(g, e) == v) sum += g.edge(e).weight;
  }
  return sum;
}

bool is_valid(const NclGraph& g, const Orientation& o) {
  check_arity(g, o);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_weight(g, o, v) < 2) return false;
  }
  return true;
}

bool is_legal_flip(const NclGraph& g, const Orientation& o, FlipMove m) {
  check_arity(g, o);
  if (m.edge >= g.edge_count()) return false;
  // Only the current head loses weight; the tail gains.
  const VertexId head = o.head(g, m.edge);
  return in_weight(g, o, head) - g.edge(m.edge).weight >= 2;
}

std::vector<FlipMove> legal_flips(const NclGraph& g, const Orientation& o) {
  if (!is_valid(g, o)) throw InputError("orientation violates a constraint");
  std::vector<FlipMove> out;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (is_legal_flip(g, o, {e})) out.push_back({e});
  }
  return out;
}

Orientation replay(const NclGraph& g, const Orientation& from,
                   std::span<const FlipMove> flips) {
  if (!is_valid(g, from)) throw MoveError("replay start is invalid");
  Orientation o = from;
  for (std::size_t i = 0; i < flips.size(); ++i) {
    if (!is_legal_flip(g, o, flips[i])) {
      throw MoveError("flip step " + std::to_string(i) + " (edge " +
                      std::to_string(flips[i].edge) + ") is illegal");
    }
    o.flip(flips[i].edge);
    if (!is_valid(g, o)) {
      throw MoveError("flip step " + std::to_string(i) +
                      " produced an invalid orientation");
    }
  }
  return o;
}

namespace {

/// BFS over valid orientations, one bit per edge in the packed state.
template <class Goal>
NclResult flip_bfs(const NclGraph& g, const Orientation& from, Goal&& goal,
                   const NclSearchOptions& opts) {
  NclResult r;
  const std::size_t m = g.edge_count();
  const SymbolCodec codec(m, 2);
  PackedStateStore store(codec.words());
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::vector<std::uint32_t> bits(m);
  for (std::size_t e = 0; e < m; ++e) bits[e] = from.toward_v(e);
  auto root = codec.pack(bits);
  store.insert(root.data());
  parent.push_back(PackedStateStore::kNone);
  via.push_back(PackedStateStore::kNone);
  r.frontier_peak = 1;

  auto decode = [&](std::uint32_t idx) {
    std::vector<bool> b(m);
    for (std::size_t e = 0; e < m; ++e) b[e] = codec.get(store.state(idx), e);
    return Orientation(std::move(b));
  };
  auto path_to = [&](std::uint32_t idx) {
    std::vector<FlipMove> out;
    while (parent[idx] != PackedStateStore::kNone) {
      out.push_back({via[idx]});
      idx = parent[idx];
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  if (goal(from)) {
    r.status = SearchStatus::Reachable;
    r.witness.emplace();
    r.states_explored = 1;
    return r;
  }
  std::size_t begin = 0;
  std::size_t end = 1;
  std::vector<std::uint64_t> scratch(codec.words());
  while (begin < end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto idx = static_cast<std::uint32_t>(i);
      const Orientation o = decode(idx);
      for (std::uint32_t e = 0; e < m; ++e) {
        if (!is_legal_flip(g, o, {e})) continue;
        const std::uint64_t* cur = store.state(idx);
        std::copy(cur, cur + codec.words(), scratch.begin());
        codec.set(scratch.data(), e, codec.get(cur, e) ^ 1U);
        auto [nidx, inserted] = store.insert(scratch.data());
        if (!inserted) continue;
        parent.push_back(idx);
        via.push_back(e);
        if (goal(o.flipped(e))) {
          r.status = SearchStatus::Reachable;
          r.witness = path_to(nidx);
          r.states_explored = store.size();
          return r;
        }
        if (store.size() > opts.max_states) {
          r.status = SearchStatus::Limit;
          r.states_explored = store.size();
          return r;
        }
      }
    }
    begin = end;
    end = store.size();
    r.frontier_peak = std::max<std::uint64_t>(r.frontier_peak, end - begin);
  }
  r.status = SearchStatus::Unreachable;
  r.states_explored = store.size();
  return r;
}

}  // namespace

NclResult solve_c2c(const NclGraph& g, const Orientation& from,
                    const Orientation& to, const NclSearchOptions& opts) {
  if (!is_valid(g, from)) throw InputError("start orientation is invalid");
  if (!is_valid(g, to)) throw InputError("target orientation is invalid");
  return flip_bfs(g, from, [&](const Orientation& o) { return o == to; }, opts);
}

NclResult solve_c2e(const NclGraph& g, const Orientation& from,
                    std::uint32_t edge, VertexId head,
                    const NclSearchOptions& opts) {
  if (!is_valid(g, from)) throw InputError("start orientation is invalid");
  if (edge >= g.edge_count()) throw InputError("edge index out of range");
  if (head != g.edge(edge).u && head != g.edge(edge).v) {
    throw InputError("desired head is not an endpoint of the edge");
  }
  return flip_bfs(
      g, from, [&](const Orientation& o) { return o.head(g, edge) == head; },
      opts);
}

ValidOrientations enumerate_valid(const NclGraph& g, bool keep_list,
                                  std::uint64_t cap) {
  const std::size_t m = g.edge_count();
  if (m > kMaxEnumerableEdges) {
    throw InputError("exhaustive enumeration supports at most " +
                     std::to_string(kMaxEnumerableEdges) + " edges");
  }
  ValidOrientations out;
  // Incremental in-weights over a Gray code walk would be faster; at <= 2^30
  // a direct per-vertex check is still fine.
  std::vector<int> in(g.vertex_count());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::fill(in.begin(), in.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      const NclEdge& ed = g.edge(e);
      in[((bits >> e) & 1U) ? ed.v : ed.u] += ed.weight;
    }
    if (std::all_of(in.begin(), in.end(), [](int w) { return w >= 2; })) {
      ++out.count;
      if (keep_list && out.list.size() < cap) {
        out.list.push_back(Orientation::from_bits(bits, m));
      }
    }
  }
  if (keep_list && out.count > cap) out.list.clear();
  return out;
}

}  // namespace fas::ncl
