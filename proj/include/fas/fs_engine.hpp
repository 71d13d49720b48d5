#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fas/graph.hpp"
#include "fas/state_store.hpp"

namespace fas {

/// A friends-and-strangers instance: a location graph and a people graph of
/// the same order.
class FasInstance {
 public:
  FasInstance() = default;
  /// Throws InputError when the orders differ.
  FasInstance(SimpleGraph locations, SimpleGraph people);

  const SimpleGraph& locations() const { return locations_; }
  const SimpleGraph& people() const { return people_; }
  std::size_t order() const { return locations_.order(); }

  friend bool operator==(const FasInstance&, const FasInstance&) = default;

 private:
  SimpleGraph locations_;
  SimpleGraph people_;
};

/// Bijection locations -> people; position i holds the person standing on
/// location i.
class Configuration {
 public:
  Configuration() = default;
  /// Throws InputError unless `assignment` is a permutation of [0, n).
  explicit Configuration(std::vector<VertexId> assignment);
  static Configuration identity(std::size_t n);

  std::size_t size() const { return assignment_.size(); }
  VertexId person_at(VertexId location) const { return assignment_[location]; }
  std::span<const VertexId> assignment() const { return assignment_; }
  /// Inverse map: position p holds the location of person p.
  std::vector<VertexId> location_of_people() const;

  /// Exchanges the people on two locations without any legality check.
  void swap_locations(VertexId a, VertexId b) {
    std::swap(assignment_[a], assignment_[b]);
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<VertexId> assignment_;
};

/// Exchange of the people standing on two adjacent locations. Normalized so
/// that loc_a < loc_b.
struct SwapMove {
  VertexId loc_a = 0;
  VertexId loc_b = 0;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
  friend auto operator<=>(const SwapMove&, const SwapMove&) = default;
};

/// Partition of the people into classes of interchangeable persons.
///
/// A classing is only sound for quotient search when every class is a clique
/// of Y whose members have identical friendships outside the class; see
/// verify_color_classing().
class ColorClassing {
 public:
  ColorClassing() = default;
  /// Throws InputError if a class id is >= class_count.
  ColorClassing(std::vector<std::uint32_t> class_of, std::uint32_t class_count);
  /// Every person in its own class; quotient search under it equals labeled
  /// search.
  static ColorClassing discrete(std::size_t n);

  std::uint32_t class_of(VertexId person) const { return class_of_[person]; }
  std::span<const std::uint32_t> classes() const { return class_of_; }
  std::uint32_t class_count() const { return class_count_; }
  std::size_t size() const { return class_of_.size(); }

  /// Same partition with `person` moved into a fresh singleton class.
  ColorClassing with_singleton(VertexId person) const;

  /// Class-valued view of a configuration, one entry per location.
  std::vector<std::uint32_t> pattern(const Configuration& c) const;

  friend bool operator==(const ColorClassing&, const ColorClassing&) = default;

 private:
  std::vector<std::uint32_t> class_of_;
  std::uint32_t class_count_ = 0;
};

bool verify_color_classing(const FasInstance& inst, const ColorClassing& cc);

enum class SearchStatus { Reachable, Unreachable, Limit };

std::string_view to_string(SearchStatus s);

template <class Move>
struct SearchResult {
  SearchStatus status = SearchStatus::Limit;
  /// Present iff status == Reachable.
  std::optional<std::vector<Move>> witness;
  std::uint64_t states_explored = 0;
  std::uint64_t frontier_peak = 0;
};

using ReachabilityResult = SearchResult<SwapMove>;

inline constexpr std::uint64_t kDefaultMaxStates = 50'000'000;

struct SearchOptions {
  /// Quotient mode when set: configurations that agree as class-valued maps
  /// are identified. Labeled mode otherwise.
  std::optional<ColorClassing> quotient;
  std::uint64_t max_states = kDefaultMaxStates;
  std::optional<std::chrono::milliseconds> time_budget;
  bool bidirectional = false;
  /// If set, only swaps whose both locations are flagged here are expanded.
  std::optional<std::vector<bool>> movable;

  static SearchOptions labeled() { return {}; }
  static SearchOptions quotient_by(ColorClassing cc) {
    SearchOptions o;
    o.quotient = std::move(cc);
    return o;
  }
};

/// Every legal swap in `c`, ordered by (loc_a, loc_b).
std::vector<SwapMove> legal_swaps(const FasInstance& inst,
                                  const Configuration& c);

bool is_legal_swap(const FasInstance& inst, const Configuration& c,
                   SwapMove m);

/// Unchecked application: the people on m.loc_a and m.loc_b trade places.
Configuration apply_swap(const Configuration& c, SwapMove m);

/// Throws MoveError if `m` is not legal in `c`.
Configuration apply_swap_checked(const FasInstance& inst,
                                 const Configuration& c, SwapMove m);

/// Replays a witness with checked moves. Throws MoveError naming the first
/// failing step.
Configuration replay(const FasInstance& inst, const Configuration& from,
                     std::span<const SwapMove> moves);

/// Configuration-to-configuration reachability. In quotient mode `to` is
/// compared through its class pattern.
ReachabilityResult solve_c2c(const FasInstance& inst, const Configuration& from,
                             const Configuration& to,
                             const SearchOptions& opts = {});

/// Can `person` reach `target` location? In quotient mode the person is split
/// into its own class so it stays trackable.
ReachabilityResult solve_person_to_location(const FasInstance& inst,
                                            const Configuration& from,
                                            VertexId person, VertexId target,
                                            const SearchOptions& opts = {});

/// Full breadth-first exploration of the component of a start
/// configuration, kept in memory for membership queries and scans.
class Exploration {
 public:
  bool complete() const { return complete_; }
  std::size_t size() const { return store_->size(); }
  std::uint64_t frontier_peak() const { return frontier_peak_; }
  std::uint32_t depth() const { return depth_; }
  /// Classing that defines the symbols of stored states (discrete in labeled
  /// mode).
  const ColorClassing& classing() const { return classing_; }

  /// Class pattern (one symbol per location) of the i-th discovered state.
  std::vector<std::uint32_t> pattern(std::size_t i) const;
  std::optional<std::size_t> find_pattern(
      std::span<const std::uint32_t> pattern) const;
  bool contains(const Configuration& c) const;

  /// Calls `fn(index, pattern)` for every stored state in discovery order.
  void for_each(const std::function<void(std::size_t,
                                         std::span<const std::uint32_t>)>& fn)
      const;

  /// Moves from the start to state i along the BFS tree.
  std::vector<SwapMove> path_to(std::size_t i) const;

  /// Indices of the stored neighbors of state i, in move order. States not
  /// stored (possible only when incomplete) are skipped.
  std::vector<std::size_t> successors(std::size_t i) const;

 private:
  friend Exploration explore(const FasInstance&, const Configuration&,
                             const SearchOptions&);

  ColorClassing classing_;
  SymbolCodec codec_;
  std::vector<std::uint8_t> friends_;
  std::uint32_t symbol_count_ = 0;
  std::vector<SwapMove> moves_;
  std::unique_ptr<PackedStateStore> store_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
  bool complete_ = false;
  std::uint64_t frontier_peak_ = 0;
  std::uint32_t depth_ = 0;
};

/// Exhaustive BFS up to opts.max_states stored states (and the optional time
/// budget). `opts.bidirectional` is ignored.
Exploration explore(const FasInstance& inst, const Configuration& from,
                    const SearchOptions& opts = {});

struct ComponentReport {
  /// Reachable means the component was fully enumerated; Limit otherwise.
  SearchStatus status = SearchStatus::Limit;
  std::uint64_t size = 0;
  std::uint64_t frontier_peak = 0;
  /// Eccentricity of the start state (BFS depth reached).
  std::uint32_t depth = 0;
};

/// Exact reachable-set size when it is below `cap`, else status Limit.
ComponentReport enumerate_component(const FasInstance& inst,
                                    const Configuration& from,
                                    const SearchOptions& opts,
                                    std::uint64_t cap);

}  // namespace fas
