#pragma once

// Reference implementations used only by tests. They enumerate whole state
// spaces by brute force and share nothing with the library's search code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(std::size_t n,
                     const std::vector<std::pair<unsigned, unsigned>>& edges) {
  Adj a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

/// Connected components of FS(X, Y) over all n! placements. Key: the
/// placement vector (location -> person); value: component id.
inline std::map<std::vector<unsigned>, std::size_t> fs_components(
    const Adj& x, const Adj& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!x[a][b] || !y[all[i][a]][all[i][b]]) continue;
        std::vector<unsigned> q = all[i];
        std::swap(q[a], q[b]);
        uf.join(i, index[q]);
      }
    }
  }
  std::map<std::vector<unsigned>, std::size_t> comp;
  for (std::size_t i = 0; i < all.size(); ++i) comp[all[i]] = uf.find(i);
  return comp;
}

struct NclEdgeSpec {
  unsigned u, v;
  int w;
};

/// Valid orientations (bit e set = edge e points at v) and the component of
/// each in the flip graph.
struct FlipGraph {
  std::vector<std::uint32_t> valid;
  std::map<std::uint32_t, std::size_t> component;
};

inline FlipGraph flip_graph(std::size_t vertices,
                            const std::vector<NclEdgeSpec>& edges) {
  auto ok = [&](std::uint32_t bits) {
    std::vector<int> in(vertices, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      in[(bits >> e & 1) ? edges[e].v : edges[e].u] += edges[e].w;
    }
    return std::all_of(in.begin(), in.end(), [](int w) { return w >= 2; });
  };
  FlipGraph fg;
  for (std::uint32_t b = 0; b < (1u << edges.size()); ++b) {
    if (ok(b)) fg.valid.push_back(b);
  }
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < fg.valid.size(); ++i) pos[fg.valid[i]] = i;
  UnionFind uf(fg.valid.size());
  for (std::size_t i = 0; i < fg.valid.size(); ++i) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::uint32_t nb = fg.valid[i] ^ (1u << e);
      if (pos.contains(nb)) uf.join(i, pos[nb]);
    }
  }
  for (std::size_t i = 0; i < fg.valid.size(); ++i) {
    fg.component[fg.valid[i]] = uf.find(i);
  }
  return fg;
}

}  // namespace oracle
