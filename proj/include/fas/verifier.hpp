#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fas/fs_engine.hpp"
#include "fas/gadgets.hpp"
#include "fas/ncl.hpp"
#include "fas/reducer.hpp"

namespace fas::verify {

// ---------------------------------------------------------------------------
// Independent oracle. Deliberately naive: std::set of symbol vectors, a plain
// queue, every location pair tested for adjacency. Shares no search code with
// the engine.

using StateSet = std::set<std::vector<std::uint32_t>>;

inline constexpr std::size_t kBruteForceCap = 10'000'000;

/// Whole reachable set from `from`; symbols are people (labeled) or class ids
/// (quotient). Throws ResourceLimitError past `cap` states.
StateSet brute_force_fs(const FasInstance& inst, const Configuration& from,
                        const std::optional<ColorClassing>& quotient = {},
                        std::size_t cap = kBruteForceCap);

// ---------------------------------------------------------------------------
// Gadget behavior checks.

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GadgetReport {
  gadgets::GadgetKind kind{};
  std::vector<PropertyResult> properties;
  std::uint64_t states_scanned = 0;

  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t max_states = 10'000'000;
};

/// All ports sealed: size of the quotient reachable set must be 1.
PropertyResult sealed_rigidity(gadgets::GadgetKind kind,
                               const SuiteOptions& opts = {});

/// SOURCE(heavy) on port 0, SINK on port 1. Returns conservation, release
/// reachability, release-implies-lock, injected-token confinement and
/// classifier coverage.
std::vector<PropertyResult> edge_transit_properties(
    gadgets::GadgetKind kind, std::uint64_t* states = nullptr,
    const SuiteOptions& opts = {});

/// SINK on both ports, no source: the heavy token never reaches a corridor.
PropertyResult edge_no_spontaneous_release(gadgets::GadgetKind kind,
                                           const SuiteOptions& opts = {});

/// Renamed blue blueprint equals the red one and the transit state graphs
/// are isomorphic under the renaming.
PropertyResult red_blue_isomorphism(const SuiteOptions& opts = {});

/// Vertex gadget with an edge gadget (drawn placement, port 0 attached) on
/// each port and the far ports sealed.
struct VertexAssembly {
  gadgets::Assembly assembly;
  std::size_t vertex_part = 0;
  std::vector<std::size_t> edge_parts;
  gadgets::ColoredInstance colored;
};

VertexAssembly vertex_assembly(gadgets::GadgetKind vertex_kind);

/// Per reachable state, which attached edge gadgets point away from the
/// vertex (bit i = port i outward) and which are mid-migration.
struct OutwardScan {
  bool complete = false;
  std::uint64_t states = 0;
  std::set<std::uint32_t> outward_masks;
};

OutwardScan scan_outward(const VertexAssembly& va, const SuiteOptions& opts);

/// OR: never all three outward; every pair of ports can be outward together.
std::vector<PropertyResult> or_properties(std::uint64_t* states = nullptr,
                                          const SuiteOptions& opts = {});

/// AND: never blue and both reds outward; both reds outward is reachable; the
/// blue outward is reachable.
std::vector<PropertyResult> and_properties(std::uint64_t* states = nullptr,
                                           const SuiteOptions& opts = {});

GadgetReport gadget_suite(gadgets::GadgetKind kind,
                          const SuiteOptions& opts = {});

// ---------------------------------------------------------------------------
// End-to-end equivalence between NCL and the reduced FAS instance.

struct PairSource {
  enum class Kind : std::uint8_t { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static PairSource exhaustive() { return {}; }
  static PairSource sampled(std::size_t count, std::uint64_t seed) {
    return {Kind::Sampled, count, seed};
  }
};

struct EquivalenceOptions {
  std::uint64_t fas_max_states = 10'000'000;
  std::uint64_t ncl_max_states = 1'000'000;
  std::uint64_t translate_max_states_per_flip = 2'000'000;
  std::size_t min_completed_pairs = 1;
  bool check_witnesses = true;
};

/// Loads overrides from a JSON config file (see config/verify_defaults.json).
EquivalenceOptions load_equivalence_options(const std::string& path,
                                            PairSource* sampling = nullptr);

struct PairOutcome {
  std::size_t from = 0;  // indices into the valid orientation list
  std::size_t to = 0;
  SearchStatus ncl = SearchStatus::Limit;
  SearchStatus fas = SearchStatus::Limit;
  std::optional<std::vector<ncl::FlipMove>> ncl_witness;
  std::optional<std::vector<SwapMove>> fas_witness;
};

struct EquivalenceReport {
  std::string description;
  std::vector<ncl::Orientation> orientations;
  std::size_t pairs_tested = 0;
  std::size_t agreements = 0;
  std::size_t skipped = 0;
  std::vector<PairOutcome> disagreements;  // sorted by (from, to)
  std::size_t reachable_pairs = 0;

  std::size_t witnesses_checked = 0;
  std::vector<std::string> witness_failures;
  /// Settled states whose read-back orientation violates a constraint.
  std::uint64_t invalid_settled_states = 0;

  std::uint64_t fas_states = 0;
  std::uint64_t ncl_states = 0;
  std::size_t fas_components = 0;
  std::size_t fas_order = 0;
  std::size_t min_completed_pairs = 1;

  std::size_t completed() const { return pairs_tested - skipped; }
  bool passed() const {
    return disagreements.empty() && witness_failures.empty() &&
           invalid_settled_states == 0 && completed() >= min_completed_pairs;
  }
};

/// Compares NCL reachability with quotient FAS reachability on the reduced
/// instance for the chosen orientation pairs. Pairs whose FAS or NCL search
/// hits a cap are counted as skipped, never as agreements.
EquivalenceReport equivalence_test(const ncl::NclGraph& g, PairSource source,
                                   const EquivalenceOptions& opts = {},
                                   std::string description = {});

/// Checks that a FAS swap sequence, read through pattern_to_orientation at
/// every step, only passes through valid orientations and that consecutive
/// settled orientations are joined by legal flips. Returns an error message
/// or nullopt.
std::optional<std::string> check_fas_witness_projection(
    const reduction::ReductionArtifact& art, const Configuration& start,
    std::span<const SwapMove> moves);

/// Labeled vs quotient reachability for one pair: soundness requires
/// labeled => quotient; the converse is only observed.
struct LabeledQuotientComparison {
  SearchStatus labeled = SearchStatus::Limit;
  SearchStatus quotient = SearchStatus::Limit;
  bool sound() const {
    return !(labeled == SearchStatus::Reachable &&
             quotient == SearchStatus::Unreachable);
  }
  bool diverges() const {
    return quotient == SearchStatus::Reachable &&
           labeled == SearchStatus::Unreachable;
  }
};

LabeledQuotientComparison compare_labeled_quotient(
    const FasInstance& inst, const ColorClassing& cc, const Configuration& from,
    const Configuration& to, std::uint64_t max_states = 1'000'000);

std::string to_text(const EquivalenceReport& r);
std::string to_text(const GadgetReport& r);

}  // namespace fas::verify
