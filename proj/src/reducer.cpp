#include "fas/reducer.hpp"

#include <algorithm>
#include <string>

#include "fas/errors.hpp"

namespace fas::reduction {

using gadgets::Color;
using gadgets::ColorPattern;
using gadgets::EdgeDirection;
using gadgets::GadgetKind;

std::vector<VertexId> ReductionArtifact::locations_of(
    const gadgets::PartRef& part) const {
  std::vector<VertexId> out(part.size);
  for (std::size_t i = 0; i < part.size; ++i) out[i] = part.global(i);
  return out;
}

namespace {

/// Port slots of a vertex gadget for its three incident edges: OR slots in
/// incidence order; AND puts the weight-2 edge on the blue port and the
/// weight-1 edges on red_a, red_b in incidence order.
std::vector<std::uint32_t> assign_slots(const ncl::NclGraph& g, VertexId v) {
  const auto inc = g.incident(v);
  if (g.kind(v) == ncl::VertexKind::Or) return {inc.begin(), inc.end()};
  std::vector<std::uint32_t> slots;
  for (std::uint32_t e : inc) {
    if (g.edge(e).weight == 2) slots.push_back(e);
  }
  for (std::uint32_t e : inc) {
    if (g.edge(e).weight == 1) slots.push_back(e);
  }
  if (slots.size() != 3 || g.edge(slots[0]).weight != 2) {
    throw InputError("AND vertex " + std::to_string(v) +
                     " has no weight-2 edge for its blue port");
  }
  return slots;
}

}  // namespace

ColorPattern orientation_pattern(const ReductionArtifact& art,
                                 const ncl::Orientation& o) {
  const ncl::NclGraph& g = art.ncl;
  if (!ncl::is_valid(g, o)) throw InputError("orientation is invalid");
  ColorPattern colors(art.assembly.order(), Color::White);
  auto paint = [&](const gadgets::PartRef& part, const ColorPattern& pattern) {
    std::copy(pattern.begin(), pattern.end(), colors.begin() + part.offset);
  };
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const EdgeGadgetRef& ref = art.edge_map[e];
    const EdgeDirection d = o.toward_v(e) ? EdgeDirection::TowardPort1
                                          : EdgeDirection::TowardPort0;
    paint(art.assembly.part(ref.part), gadgets::edge_canonical(ref.kind, d));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexGadgetRef& ref = art.vertex_map[v];
    std::vector<bool> inward_vec;
    for (std::uint32_t e : ref.port_edges) inward_vec.push_back(o.head(g, e) == v);
    std::array<bool, 3> inward{inward_vec[0], inward_vec[1], inward_vec[2]};
    const ColorPattern p =
        ref.kind == GadgetKind::OrVertex
            ? gadgets::or_placement(inward)
            : gadgets::and_placement(inward[0], inward[1], inward[2]);
    paint(art.assembly.part(ref.part), p);
  }
  return colors;
}

namespace {

Configuration place_people(std::span<const Color> person_colors,
                           std::span<const Color> location_colors) {
  std::array<std::vector<VertexId>, gadgets::kColorCount> people;
  for (VertexId p = 0; p < person_colors.size(); ++p) {
    people[static_cast<std::size_t>(person_colors[p])].push_back(p);
  }
  std::array<std::size_t, gadgets::kColorCount> next{};
  std::vector<VertexId> assignment(location_colors.size());
  for (VertexId loc = 0; loc < location_colors.size(); ++loc) {
    const auto c = static_cast<std::size_t>(location_colors[loc]);
    if (next[c] >= people[c].size()) {
      throw ReductionDefect("color population differs between placements (" +
                            std::string(gadgets::to_string(location_colors[loc])) +
                            ")");
    }
    assignment[loc] = people[c][next[c]++];
  }
  return Configuration(std::move(assignment));
}

}  // namespace

Configuration orientation_to_config(const ReductionArtifact& art,
                                    const ncl::Orientation& o) {
  return place_people(art.colors, orientation_pattern(art, o));
}

ReductionArtifact reduce(const ncl::NclGraph& g, const ncl::Orientation& f,
                         const ncl::Orientation& t) {
  if (!ncl::is_valid(g, f)) throw InputError("start orientation is invalid");
  if (!ncl::is_valid(g, t)) throw InputError("target orientation is invalid");
  ReductionArtifact art;
  art.ncl = g;
  art.from = f;
  art.to = t;

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexGadgetRef ref;
    ref.kind = g.kind(v) == ncl::VertexKind::Or ? GadgetKind::OrVertex
                                                : GadgetKind::AndVertex;
    ref.part = art.assembly.add(ref.kind);
    ref.port_edges = assign_slots(g, v);
    art.vertex_map.push_back(std::move(ref));
  }
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const ncl::NclEdge& ed = g.edge(e);
    EdgeGadgetRef ref;
    ref.kind = ed.weight == 2 ? GadgetKind::BlueEdge : GadgetKind::RedEdge;
    ref.part = art.assembly.add(ref.kind);
    const std::array<VertexId, 2> ends{ed.u, ed.v};
    for (std::size_t side = 0; side < 2; ++side) {
      const VertexGadgetRef& vref = art.vertex_map[ends[side]];
      const auto it =
          std::find(vref.port_edges.begin(), vref.port_edges.end(), e);
      ref.slot[side] = static_cast<std::size_t>(it - vref.port_edges.begin());
      const auto& vbp = gadgets::blueprint(vref.kind);
      const auto& ebp = gadgets::blueprint(ref.kind);
      if (vbp.ports[ref.slot[side]].light != ebp.ports[side].light) {
        throw ReductionDefect("port color mismatch on edge " + std::to_string(e));
      }
      art.assembly.connect(ref.part, side, vref.part, ref.slot[side]);
      ref.port_pairing[side] = {
          art.assembly.part(ref.part).global(ebp.ports[side].location),
          art.assembly.part(vref.part).global(vbp.ports[ref.slot[side]].location)};
    }
    art.edge_map.push_back(ref);
  }

  const ColorPattern start = orientation_pattern(art, f);
  gadgets::ColoredInstance ci =
      gadgets::colored_instance(art.assembly.graph(), start);
  art.fas = std::move(ci.instance);
  art.colors = std::move(ci.colors);
  art.classing = std::move(ci.classing);
  art.sigma = std::move(ci.start);
  art.sigma_prime = orientation_to_config(art, t);
  art.planar_input = ncl::planarity_flag(g);
  return art;
}

std::optional<ncl::Orientation> pattern_to_orientation(
    const ReductionArtifact& art, std::span<const std::uint32_t> pattern) {
  if (pattern.size() != art.fas.order()) {
    throw InputError("pattern does not cover the reduced instance");
  }
  std::vector<bool> bits(art.ncl.edge_count());
  for (std::uint32_t e = 0; e < art.ncl.edge_count(); ++e) {
    const EdgeGadgetRef& ref = art.edge_map[e];
    const auto& part = art.assembly.part(ref.part);
    const EdgeDirection d = gadgets::direction_of(
        gadgets::blueprint(ref.kind), gadgets::restrict_colors(pattern, part));
    if (d == EdgeDirection::Transitional) return std::nullopt;
    bits[e] = d == EdgeDirection::TowardPort1;
  }
  return ncl::Orientation(std::move(bits));
}

std::optional<ncl::Orientation> config_to_orientation(
    const ReductionArtifact& art, const Configuration& c) {
  return pattern_to_orientation(art, art.classing.pattern(c));
}

std::vector<bool> flip_region(const ReductionArtifact& art, std::uint32_t edge) {
  std::vector<bool> mask(art.fas.order(), false);
  auto mark = [&](std::size_t part_index) {
    const auto& part = art.assembly.part(part_index);
    for (std::size_t i = 0; i < part.size; ++i) mask[part.global(i)] = true;
  };
  const ncl::NclEdge& ed = art.ncl.edge(edge);
  mark(art.edge_map[edge].part);
  mark(art.vertex_map[ed.u].part);
  mark(art.vertex_map[ed.v].part);
  return mask;
}

std::vector<SwapMove> translate_witness(const ReductionArtifact& art,
                                        std::span<const ncl::FlipMove> flips,
                                        const TranslateOptions& opts) {
  return translate_witness(art, art.from, art.sigma, flips, opts);
}

std::vector<SwapMove> translate_witness(const ReductionArtifact& art,
                                        const ncl::Orientation& from,
                                        const Configuration& start,
                                        std::span<const ncl::FlipMove> flips,
                                        const TranslateOptions& opts) {
  if (!ncl::is_valid(art.ncl, from)) {
    throw InputError("start orientation is invalid");
  }
  std::vector<SwapMove> out;
  ncl::Orientation o = from;
  Configuration c = start;
  for (std::size_t i = 0; i < flips.size(); ++i) {
    const std::uint32_t e = flips[i].edge;
    if (!ncl::is_legal_flip(art.ncl, o, flips[i])) {
      throw InputError("flip " + std::to_string(i) + " (edge " +
                       std::to_string(e) + ") is not legal");
    }
    const ncl::Orientation next = o.flipped(e);
    SearchOptions so = SearchOptions::quotient_by(art.classing);
    so.movable = flip_region(art, e);
    so.max_states = opts.max_states_per_flip;
    so.bidirectional = true;
    const ReachabilityResult r =
        solve_c2c(art.fas, c, orientation_to_config(art, next), so);
    if (r.status != SearchStatus::Reachable) {
      throw ReductionDefect("flip " + std::to_string(i) + " of edge " +
                            std::to_string(e) + " could not be realized (" +
                            std::string(to_string(r.status)) + ")");
    }
    c = replay(art.fas, c, *r.witness);
    out.insert(out.end(), r.witness->begin(), r.witness->end());
    o = next;
  }
  return out;
}

}  // namespace fas::reduction
