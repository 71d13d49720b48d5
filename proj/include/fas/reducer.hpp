#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fas/fs_engine.hpp"
#include "fas/gadgets.hpp"
#include "fas/ncl.hpp"

namespace fas::reduction {

/// Where an NCL edge lives in the location graph. Port 0 of the edge gadget
/// is attached to edge.u's vertex gadget, port 1 to edge.v's.
struct EdgeGadgetRef {
  std::size_t part = 0;
  gadgets::GadgetKind kind = gadgets::GadgetKind::BlueEdge;
  /// Vertex-gadget port slot used at u and at v.
  std::array<std::size_t, 2> slot{};
  /// (edge gadget port location, vertex gadget port location) per side.
  std::array<std::pair<VertexId, VertexId>, 2> port_pairing{};
};

struct VertexGadgetRef {
  std::size_t part = 0;
  gadgets::GadgetKind kind = gadgets::GadgetKind::OrVertex;
  /// NCL edge attached to each port slot of the vertex gadget.
  std::vector<std::uint32_t> port_edges;
};

struct ReductionArtifact {
  ncl::NclGraph ncl;
  ncl::Orientation from;
  ncl::Orientation to;
  gadgets::Assembly assembly;
  FasInstance fas;
  Configuration sigma;
  Configuration sigma_prime;
  /// Color of each person.
  gadgets::ColorPattern colors;
  ColorClassing classing;
  std::vector<EdgeGadgetRef> edge_map;
  std::vector<VertexGadgetRef> vertex_map;
  /// Planarity of the NCL skeleton when checkable.
  std::optional<bool> planar_input;

  std::vector<VertexId> locations_of(const gadgets::PartRef& part) const;
};

/// Compiles an NCL instance and two orientations into an FAS instance. Throws
/// InputError when either orientation is invalid.
ReductionArtifact reduce(const ncl::NclGraph& g, const ncl::Orientation& f,
                         const ncl::Orientation& t);

/// Color on each location for the canonical placement of `o`.
gadgets::ColorPattern orientation_pattern(const ReductionArtifact& art,
                                          const ncl::Orientation& o);

/// Canonical labeled configuration of `o`: within each color, people are
/// placed on that color's locations in ascending order.
Configuration orientation_to_config(const ReductionArtifact& art,
                                    const ncl::Orientation& o);

/// Reads the orientation back off a class pattern (class id = color index).
/// nullopt when some edge gadget is mid-migration.
std::optional<ncl::Orientation> pattern_to_orientation(
    const ReductionArtifact& art, std::span<const std::uint32_t> pattern);

std::optional<ncl::Orientation> config_to_orientation(
    const ReductionArtifact& art, const Configuration& c);

/// Locations the search may touch when realizing a flip of `edge`: the edge
/// gadget and both endpoint vertex gadgets.
std::vector<bool> flip_region(const ReductionArtifact& art, std::uint32_t edge);

struct TranslateOptions {
  std::uint64_t max_states_per_flip = 2'000'000;
};

/// Expands an NCL flip sequence starting at art.from into a legal swap
/// sequence starting at art.sigma. Each flip is realized by a search confined
/// to flip_region(). Throws InputError for an illegal flip sequence and
/// ReductionDefect when a flip cannot be realized.
std::vector<SwapMove> translate_witness(const ReductionArtifact& art,
                                        std::span<const ncl::FlipMove> flips,
                                        const TranslateOptions& opts = {});

/// Same, starting from an arbitrary valid orientation and a configuration
/// whose class pattern is the canonical one of `from`.
std::vector<SwapMove> translate_witness(const ReductionArtifact& art,
                                        const ncl::Orientation& from,
                                        const Configuration& start,
                                        std::span<const ncl::FlipMove> flips,
                                        const TranslateOptions& opts = {});

}  // namespace fas::reduction
