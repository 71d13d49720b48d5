#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fas/fs_engine.hpp"
#include "fas/graph.hpp"

namespace fas::ncl {

enum class VertexKind : std::uint8_t { And, Or };

std::string_view to_string(VertexKind k);

/// Weight 2 edges are drawn blue, weight 1 edges red.
struct NclEdge {
  VertexId u = 0;
  VertexId v = 0;
  int weight = 2;

  friend bool operator==(const NclEdge&, const NclEdge&) = default;
};

/// 3-regular constraint graph with AND/OR vertices. Parallel edges are
/// allowed, loops are not. Every OR vertex sees weights {2,2,2}, every AND
/// vertex {2,1,1}; the constructor rejects anything else with InputError.
class NclGraph {
 public:
  NclGraph() = default;
  NclGraph(std::vector<VertexKind> kinds, std::vector<NclEdge> edges);

  std::size_t vertex_count() const { return kinds_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexKind kind(VertexId v) const { return kinds_[v]; }
  const std::vector<VertexKind>& kinds() const { return kinds_; }
  const NclEdge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<NclEdge>& edges() const { return edges_; }
  /// The three incident edge indices of v, ascending.
  std::span<const std::uint32_t> incident(VertexId v) const {
    return incident_[v];
  }

  /// Underlying simple graph (parallel edges collapsed), used for the
  /// planarity flag.
  SimpleGraph skeleton() const;

  friend bool operator==(const NclGraph& a, const NclGraph& b) {
    return a.kinds_ == b.kinds_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexKind> kinds_;
  std::vector<NclEdge> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

/// Planarity of the skeleton when it fits the small-instance checker,
/// nullopt when it does not.
std::optional<bool> planarity_flag(const NclGraph& g);

/// One bit per edge: false = head is edge.u, true = head is edge.v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> toward_v) : bits_(std::move(toward_v)) {}
  static Orientation from_bits(std::uint64_t bits, std::size_t edge_count);

  std::size_t size() const { return bits_.size(); }
  bool toward_v(std::size_t e) const { return bits_[e]; }
  VertexId head(const NclGraph& g, std::size_t e) const {
    return bits_[e] ? g.edge(e).v : g.edge(e).u;
  }
  VertexId tail(const NclGraph& g, std::size_t e) const {
    return bits_[e] ? g.edge(e).u : g.edge(e).v;
  }
  void flip(std::size_t e) { bits_[e] = !bits_[e]; }
  Orientation flipped(std::size_t e) const {
    Orientation o = *this;
    o.flip(e);
    return o;
  }
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation& a, const Orientation& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

struct FlipMove {
  std::uint32_t edge = 0;

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

using NclResult = SearchResult<FlipMove>;

struct NclSearchOptions {
  std::uint64_t max_states = 50'000'000;
};

/// Sum of weights of edges whose head is v.
int in_weight(const NclGraph& g, const Orientation& o, VertexId v);

/// Throws InputError when the orientation does not cover every edge.
bool is_valid(const NclGraph& g, const Orientation& o);

/// Edges whose reversal keeps both endpoints satisfied, ascending. Throws
/// InputError if `o` itself is invalid.
std::vector<FlipMove> legal_flips(const NclGraph& g, const Orientation& o);

bool is_legal_flip(const NclGraph& g, const Orientation& o, FlipMove m);

/// Replays flips, checking each step. Throws MoveError on the first illegal
/// flip.
Orientation replay(const NclGraph& g, const Orientation& from,
                   std::span<const FlipMove> flips);

/// Throws InputError if either endpoint orientation is invalid.
NclResult solve_c2c(const NclGraph& g, const Orientation& from,
                    const Orientation& to, const NclSearchOptions& opts = {});

/// Can `edge` be made to point at `head`? Throws InputError if `from` is
/// invalid or `head` is not an endpoint of `edge`.
NclResult solve_c2e(const NclGraph& g, const Orientation& from,
                    std::uint32_t edge, VertexId head,
                    const NclSearchOptions& opts = {});

inline constexpr std::size_t kMaxEnumerableEdges = 30;

struct ValidOrientations {
  std::uint64_t count = 0;
  /// Filled only when requested and count <= cap; ascending bit order.
  std::vector<Orientation> list;
};

/// Exhaustive count of valid orientations. Throws InputError for more than
/// kMaxEnumerableEdges edges.
ValidOrientations enumerate_valid(const NclGraph& g, bool keep_list = false,
                                  std::uint64_t cap = 1'000'000);

}  // namespace fas::ncl
