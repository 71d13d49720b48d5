#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fas/fs_engine.hpp"
#include "fas/graph.hpp"

namespace fas::gadgets {

/// The eight kinds of people used by the construction.
enum class Color : std::uint8_t {
  Blue,
  LightBlue,
  Red,
  LightRed,
  Green,
  White,
  Orange,
  Violet,
};

inline constexpr std::size_t kColorCount = 8;
inline constexpr std::array<Color, kColorCount> kAllColors{
    Color::Blue,  Color::LightBlue, Color::Red,    Color::LightRed,
    Color::Green, Color::White,     Color::Orange, Color::Violet};

/// "BLUE", "LIGHT_BLUE", ...
std::string_view to_string(Color c);
/// Accepts the upper-case names; throws InputError otherwise.
Color color_from_string(std::string_view s);
/// Graphviz fill color.
std::string_view dot_color(Color c);

/// Same colors are always friends; different colors are friends iff they are
/// joined in the color relation graph.
bool friendship(Color a, Color b);

/// Y on people 0..n-1: i ~ j iff i != j and friendship(colors[i], colors[j]).
SimpleGraph build_people_graph(std::span<const Color> colors);

/// Classing by color (class id = color index), sound for quotient search on
/// any people graph built by build_people_graph.
ColorClassing color_classing(std::span<const Color> colors);

using ColorPattern = std::vector<Color>;

enum class GadgetKind : std::uint8_t { BlueEdge, RedEdge, OrVertex, AndVertex };

std::string_view to_string(GadgetKind k);
/// Accepts "blue-edge", "red-edge", "or-vertex", "and-vertex" (and the
/// upper-case underscore forms).
GadgetKind gadget_kind_from_string(std::string_view s);
bool is_edge_gadget(GadgetKind k);

struct Port {
  std::string name;
  VertexId location = 0;
  /// Color of the corridor people that sit behind this port.
  Color light = Color::LightBlue;
};

/// Node of the figure transcription; coordinates are the figure's.
struct LocationInfo {
  std::string name;
  double x = 0;
  double y = 0;
};

struct GadgetBlueprint {
  GadgetKind kind = GadgetKind::BlueEdge;
  SimpleGraph locations;
  ColorPattern initial_colors;
  std::vector<Port> ports;
  std::map<std::string, VertexId> named;
  std::vector<LocationInfo> info;
  /// The color of the token whose release this gadget tracks (BLUE or RED
  /// for edge gadgets; BLUE for vertex gadgets).
  Color heavy = Color::Blue;

  std::size_t size() const { return initial_colors.size(); }
  VertexId at(const std::string& name) const;
  std::size_t port_index(std::string_view name) const;
};

/// The transcribed fragment, numbered row-major over figure coordinates (top
/// row first, left to right). Returned reference is to an immutable constant.
const GadgetBlueprint& blueprint(GadgetKind kind);

/// Recolors a pattern with BLUE->RED, LIGHT_BLUE->LIGHT_RED.
ColorPattern blue_to_red(std::span<const Color> colors);

enum class EdgeDirection : std::uint8_t { TowardPort0, TowardPort1, Transitional };

std::string_view to_string(EdgeDirection d);

/// Classifies an edge gadget by the tokens on its locking locations. `colors`
/// holds the color on each blueprint location.
EdgeDirection direction_of(const GadgetBlueprint& bp,
                           std::span<const Color> colors);

/// Canonical placement of an edge gadget for a settled direction. The port-0
/// placement is the drawn one; the port-1 placement is produced by running
/// the token migration in a harness.
const ColorPattern& edge_canonical(GadgetKind kind, EdgeDirection d);

/// OR placement for the given per-port inward flags (at least one inward):
/// inward-1 free blues on the drawn blue slots, light blue elsewhere.
ColorPattern or_placement(std::span<const bool> inward);

/// AND placement. Requires blue_in || (red_a_in && red_b_in). With the blue
/// edge inward the blue stays locked and each inward red edge keeps its red
/// token at its port; otherwise the placement reached after the blue has been
/// released (produced by simulation).
ColorPattern and_placement(bool blue_in, bool red_a_in, bool red_b_in);

// ---------------------------------------------------------------------------
// Assembly of several gadgets into one location graph.

struct PartRef {
  GadgetKind kind;
  VertexId offset = 0;
  std::size_t size = 0;
  VertexId global(VertexId local) const { return offset + local; }
};

class Assembly {
 public:
  std::size_t add(GadgetKind kind);
  /// Joins two ports with a single location edge.
  void connect(std::size_t part_a, std::size_t port_a, std::size_t part_b,
               std::size_t port_b);
  /// Appends a path of `length` extra locations hanging off a port; returns
  /// their ids, nearest first.
  std::vector<VertexId> add_corridor(std::size_t part, std::size_t port,
                                     std::size_t length);

  std::size_t order() const { return order_; }
  const std::vector<PartRef>& parts() const { return parts_; }
  const PartRef& part(std::size_t i) const { return parts_[i]; }
  SimpleGraph graph() const;

 private:
  std::vector<PartRef> parts_;
  std::vector<Edge> extra_;
  std::size_t order_ = 0;
};

/// FAS instance whose people graph is built from a color per location; the
/// start configuration is the identity (person i on location i).
struct ColoredInstance {
  FasInstance instance;
  Configuration start;
  ColorPattern colors;  // per person
  ColorClassing classing;
};

ColoredInstance colored_instance(const SimpleGraph& locations,
                                 std::span<const Color> colors_by_location);

// ---------------------------------------------------------------------------
// Isolation harness.

inline constexpr std::size_t kCorridorLength = 3;

struct PortScenario {
  enum class Kind : std::uint8_t { Sealed, Source, Sink };
  Kind kind = Kind::Sealed;
  Color token = Color::Blue;  // Source only

  static PortScenario sealed() { return {}; }
  static PortScenario source(Color c) { return {Kind::Source, c}; }
  static PortScenario sink() { return {Kind::Sink, Color::Blue}; }
};

struct Harness {
  ColoredInstance colored;
  /// Blueprint location i is harness location i.
  std::size_t gadget_size = 0;
  /// Per port: corridor locations nearest first (empty when sealed). A Source
  /// corridor carries its token on the farthest location.
  std::vector<std::vector<VertexId>> corridors;
};

/// Throws InputError unless `scenario` has one entry per port.
Harness harness(const GadgetBlueprint& bp,
                std::span<const PortScenario> scenario);

/// Colors on the gadget's own locations for a class pattern over an
/// instance whose class ids are color indices.
ColorPattern restrict_colors(std::span<const std::uint32_t> pattern,
                             const PartRef& part);

Color color_of_class(std::uint32_t class_id);

}  // namespace fas::gadgets
