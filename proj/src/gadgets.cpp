#include "fas/gadgets.hpp"

#include <algorithm>
#include <mutex>

#include "fas/errors.hpp"

namespace fas::gadgets {

namespace {

struct ColorName {
  Color color;
  std::string_view name;
  std::string_view dot;
};

constexpr std::array<ColorName, kColorCount> kColorNames{{
    {Color::Blue, "BLUE", "blue"},
    {Color::LightBlue, "LIGHT_BLUE", "lightblue"},
    {Color::Red, "RED", "red"},
    {Color::LightRed, "LIGHT_RED", "pink"},
    {Color::Green, "GREEN", "green"},
    {Color::White, "WHITE", "white"},
    {Color::Orange, "ORANGE", "orange"},
    {Color::Violet, "VIOLET", "violet"},
}};

// Edges of the color relation graph between distinct colors.
constexpr std::array<std::pair<Color, Color>, 7> kFriendPairs{{
    {Color::LightBlue, Color::Blue},
    {Color::Blue, Color::Orange},
    {Color::LightRed, Color::Red},
    {Color::Red, Color::Orange},
    {Color::Orange, Color::Violet},
    {Color::Orange, Color::Green},
    {Color::Green, Color::White},
}};

}  // namespace

std::string_view to_string(Color c) {
  return kColorNames[static_cast<std::size_t>(c)].name;
}

std::string_view dot_color(Color c) {
  return kColorNames[static_cast<std::size_t>(c)].dot;
}

Color color_from_string(std::string_view s) {
  for (const auto& cn : kColorNames) {
    if (cn.name == s) return cn.color;
  }
  throw InputError("unknown color '" + std::string(s) + "'");
}

bool friendship(Color a, Color b) {
  if (a == b) return true;
  return std::any_of(kFriendPairs.begin(), kFriendPairs.end(),
                     [&](const auto& p) {
                       return (p.first == a && p.second == b) ||
                              (p.first == b && p.second == a);
                     });
}

SimpleGraph build_people_graph(std::span<const Color> colors) {
  std::vector<Edge> es;
  for (VertexId i = 0; i < colors.size(); ++i) {
    for (VertexId j = i + 1; j < colors.size(); ++j) {
      if (friendship(colors[i], colors[j])) es.push_back({i, j});
    }
  }
  return SimpleGraph(colors.size(), es);
}

ColorClassing color_classing(std::span<const Color> colors) {
  std::vector<std::uint32_t> ids(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    ids[i] = static_cast<std::uint32_t>(colors[i]);
  }
  return ColorClassing(std::move(ids), kColorCount);
}

Color color_of_class(std::uint32_t class_id) {
  if (class_id >= kColorCount) {
    throw InputError("class id " + std::to_string(class_id) +
                     " is not a color");
  }
  return static_cast<Color>(class_id);
}

std::string_view to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::BlueEdge:
      return "BLUE_EDGE";
    case GadgetKind::RedEdge:
      return "RED_EDGE";
    case GadgetKind::OrVertex:
      return "OR_VERTEX";
    case GadgetKind::AndVertex:
      return "AND_VERTEX";
  }
  return "?";
}

GadgetKind gadget_kind_from_string(std::string_view s) {
  if (s == "blue-edge" || s == "BLUE_EDGE") return GadgetKind::BlueEdge;
  if (s == "red-edge" || s == "RED_EDGE") return GadgetKind::RedEdge;
  if (s == "or-vertex" || s == "OR_VERTEX") return GadgetKind::OrVertex;
  if (s == "and-vertex" || s == "AND_VERTEX") return GadgetKind::AndVertex;
  throw InputError("unknown gadget kind '" + std::string(s) + "'");
}

bool is_edge_gadget(GadgetKind k) {
  return k == GadgetKind::BlueEdge || k == GadgetKind::RedEdge;
}

VertexId GadgetBlueprint::at(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) {
    throw InputError("blueprint has no location named '" + name + "'");
  }
  return it->second;
}

std::size_t GadgetBlueprint::port_index(std::string_view name) const {
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (ports[i].name == name) return i;
  }
  throw InputError("blueprint has no port named '" + std::string(name) + "'");
}

ColorPattern blue_to_red(std::span<const Color> colors) {
  ColorPattern out(colors.begin(), colors.end());
  for (Color& c : out) {
    if (c == Color::Blue) c = Color::Red;
    else if (c == Color::LightBlue) c = Color::LightRed;
  }
  return out;
}

namespace {

struct Row {
  const char* name;
  double x;
  double y;
  Color color;
};

GadgetBlueprint make(GadgetKind kind, std::initializer_list<Row> rows,
                     std::initializer_list<std::pair<VertexId, VertexId>> edges,
                     std::vector<Port> ports,
                     std::map<std::string, VertexId> named) {
  GadgetBlueprint bp;
  bp.kind = kind;
  for (const Row& r : rows) {
    bp.info.push_back({r.name, r.x, r.y});
    bp.initial_colors.push_back(r.color);
  }
  std::map<VertexId, std::string> labels;
  for (VertexId i = 0; i < bp.info.size(); ++i) labels[i] = bp.info[i].name;
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back({a, b});
  bp.locations = SimpleGraph(bp.info.size(), es, std::move(labels));
  bp.ports = std::move(ports);
  bp.named = std::move(named);
  return bp;
}

constexpr Color G = Color::Green;
constexpr Color V = Color::Violet;
constexpr Color W = Color::White;
constexpr Color O = Color::Orange;
constexpr Color B = Color::Blue;
constexpr Color LB = Color::LightBlue;
constexpr Color R = Color::Red;
constexpr Color LR = Color::LightRed;

GadgetBlueprint make_blue_edge() {
  GadgetBlueprint bp = make(
      GadgetKind::BlueEdge,
      {
          {"v0", 4, 2, G},   {"v1", 6, 2, V},   {"v2", 8, 2, W},
          {"v3", 10, 2, W},  {"v4", 12, 2, W},  {"v5", 14, 2, W},
          {"v6", 16, 2, W},  {"v7", 18, 2, O},  {"v8", 0, 0, LB},
          {"v9", 2, 0, LB},  {"v10", 4, 0, LB}, {"v11", 6, 0, LB},
          {"v12", 8, 0, O},  {"v13", 14, 0, B}, {"v14", 16, 0, V},
          {"v15", 18, 0, LB}, {"v16", 20, 0, LB}, {"v17", 22, 0, LB},
      },
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
       {11, 1},
       {8, 9}, {9, 10}, {10, 11}, {11, 12},
       {14, 6},
       {13, 14}, {14, 15}, {15, 16}, {16, 17}},
      {{"left", 8, LB}, {"right", 17, LB}},
      {{"alpha", 12}, {"beta", 7}, {"gamma", 13}});
  bp.heavy = B;
  return bp;
}

GadgetBlueprint make_red_edge() {
  GadgetBlueprint bp = make_blue_edge();
  bp.kind = GadgetKind::RedEdge;
  bp.initial_colors = blue_to_red(bp.initial_colors);
  for (Port& p : bp.ports) p.light = LR;
  bp.heavy = R;
  return bp;
}

GadgetBlueprint make_or_vertex() {
  GadgetBlueprint bp = make(
      GadgetKind::OrVertex,
      {
          {"m2", -2, 8, LB},
          {"o2", -2, 6, B},
          {"m", -2, 4, LB},
          {"o1", -2, 2, B},
          {"m1", -2, 0, LB},
      },
      {{4, 3}, {2, 3}, {2, 1}, {0, 1}},
      {{"bottom", 4, LB}, {"middle", 2, LB}, {"top", 0, LB}},
      {{"blue_slot_1", 3}, {"blue_slot_2", 1}});
  bp.heavy = B;
  return bp;
}

GadgetBlueprint make_and_vertex() {
  GadgetBlueprint bp = make(
      GadgetKind::AndVertex,
      {
          {"n3", -10, 8, LR}, {"n2", -2, 8, R},   {"q2", -8, 4, O},
          {"q1", -4, 4, O},   {"n1", -2, 4, R},   {"n4", -10, 2, LR},
          {"p2", -8, 2, LR},  {"p1", -4, 2, LR},  {"n", -2, 2, LR},
          {"o3", -10, 0, B},  {"o2", -8, 0, V},   {"m2", -6, 0, LB},
          {"o1", -4, 0, V},   {"m", -2, 0, LB},
      },
      {{11, 12}, {11, 10}, {13, 12}, {10, 9}, {3, 7}, {2, 6}, {12, 7},
       {10, 6}, {1, 0}, {0, 5}, {5, 6}, {4, 8}, {8, 7}},
      {{"blue", 13, LB}, {"red_a", 4, LR}, {"red_b", 1, LR}},
      {{"blue_lock", 9}, {"red_lock_a", 3}, {"red_lock_b", 2}});
  bp.heavy = B;
  return bp;
}

}  // namespace

const GadgetBlueprint& blueprint(GadgetKind kind) {
  static const std::array<GadgetBlueprint, 4> all{
      make_blue_edge(), make_red_edge(), make_or_vertex(), make_and_vertex()};
  return all[static_cast<std::size_t>(kind)];
}

std::string_view to_string(EdgeDirection d) {
  switch (d) {
    case EdgeDirection::TowardPort0:
      return "TOWARD_PORT_0";
    case EdgeDirection::TowardPort1:
      return "TOWARD_PORT_1";
    case EdgeDirection::Transitional:
      return "TRANSITIONAL";
  }
  return "?";
}

EdgeDirection direction_of(const GadgetBlueprint& bp,
                           std::span<const Color> colors) {
  if (!is_edge_gadget(bp.kind)) {
    throw InputError("direction_of needs an edge gadget blueprint");
  }
  if (colors.size() != bp.size()) {
    throw InputError("color pattern does not cover the gadget");
  }
  const Color heavy = bp.heavy;
  const Color alpha = colors[bp.at("alpha")];
  const Color beta = colors[bp.at("beta")];
  const Color gamma = colors[bp.at("gamma")];
  // v1 and v14 hold the violets while the heavy token is locked at gamma; v6
  // and v11 hold them once it is locked at alpha.
  const Color v1 = colors[1];
  const Color v6 = colors[6];
  const Color v11 = colors[11];
  const Color v14 = colors[14];
  if (alpha == Color::Orange && gamma == heavy && beta == Color::Orange &&
      v1 == Color::Violet && v14 == Color::Violet) {
    return EdgeDirection::TowardPort0;
  }
  if (alpha == heavy && gamma == Color::Orange && beta == Color::Green &&
      v6 == Color::Violet && v11 == Color::Violet) {
    return EdgeDirection::TowardPort1;
  }
  return EdgeDirection::Transitional;
}

// ---------------------------------------------------------------------------

std::size_t Assembly::add(GadgetKind kind) {
  const std::size_t size = blueprint(kind).size();
  parts_.push_back({kind, static_cast<VertexId>(order_), size});
  order_ += size;
  return parts_.size() - 1;
}

void Assembly::connect(std::size_t part_a, std::size_t port_a,
                       std::size_t part_b, std::size_t port_b) {
  const PartRef& a = parts_.at(part_a);
  const PartRef& b = parts_.at(part_b);
  const VertexId la = blueprint(a.kind).ports.at(port_a).location;
  const VertexId lb = blueprint(b.kind).ports.at(port_b).location;
  extra_.push_back({a.global(la), b.global(lb)});
}

std::vector<VertexId> Assembly::add_corridor(std::size_t part,
                                             std::size_t port,
                                             std::size_t length) {
  const PartRef& p = parts_.at(part);
  VertexId prev = p.global(blueprint(p.kind).ports.at(port).location);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < length; ++i) {
    const auto loc = static_cast<VertexId>(order_++);
    extra_.push_back({prev, loc});
    out.push_back(loc);
    prev = loc;
  }
  return out;
}

SimpleGraph Assembly::graph() const {
  std::vector<Edge> es = extra_;
  for (const PartRef& p : parts_) {
    for (const Edge& e : blueprint(p.kind).locations.edges()) {
      es.push_back({p.global(e.first), p.global(e.second)});
    }
  }
  return SimpleGraph(order_, es);
}

ColoredInstance colored_instance(const SimpleGraph& locations,
                                 std::span<const Color> colors_by_location) {
  if (colors_by_location.size() != locations.order()) {
    throw InputError("need one color per location");
  }
  ColoredInstance ci;
  ci.colors.assign(colors_by_location.begin(), colors_by_location.end());
  ci.instance = FasInstance(locations, build_people_graph(ci.colors));
  ci.start = Configuration::identity(locations.order());
  ci.classing = color_classing(ci.colors);
  return ci;
}

ColorPattern restrict_colors(std::span<const std::uint32_t> pattern,
                             const PartRef& part) {
  ColorPattern out(part.size);
  for (std::size_t i = 0; i < part.size; ++i) {
    out[i] = color_of_class(pattern[part.offset + i]);
  }
  return out;
}

Harness harness(const GadgetBlueprint& bp,
                std::span<const PortScenario> scenario) {
  if (scenario.size() != bp.ports.size()) {
    throw InputError("harness scenario needs one entry per port (" +
                     std::to_string(bp.ports.size()) + ")");
  }
  Assembly as;
  const std::size_t part = as.add(bp.kind);
  Harness h;
  h.gadget_size = bp.size();
  ColorPattern colors = bp.initial_colors;
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    if (scenario[i].kind == PortScenario::Kind::Sealed) {
      h.corridors.emplace_back();
      continue;
    }
    auto corridor = as.add_corridor(part, i, kCorridorLength);
    for (std::size_t j = 0; j < corridor.size(); ++j) {
      const bool token = scenario[i].kind == PortScenario::Kind::Source &&
                         j + 1 == corridor.size();
      colors.push_back(token ? scenario[i].token : bp.ports[i].light);
    }
    h.corridors.push_back(std::move(corridor));
  }
  h.colored = colored_instance(as.graph(), colors);
  return h;
}

// ---------------------------------------------------------------------------
// Simulated canonical placements.

namespace {

/// First state in BFS order satisfying `pred`, restricted to the gadget.
template <class Pred>
ColorPattern first_matching(const Harness& h, Pred&& pred) {
  SearchOptions opts = SearchOptions::quotient_by(h.colored.classing);
  opts.max_states = 5'000'000;
  const Exploration ex = explore(h.colored.instance, h.colored.start, opts);
  const PartRef part{GadgetKind::BlueEdge, 0, h.gadget_size};
  std::optional<ColorPattern> found;
  ex.for_each([&](std::size_t, std::span<const std::uint32_t> pattern) {
    if (found) return;
    if (pred(pattern)) found = restrict_colors(pattern, part);
  });
  if (!found) {
    throw ReductionDefect("token migration did not reach a settled state");
  }
  return *found;
}

ColorPattern simulate_edge_release(GadgetKind kind) {
  const GadgetBlueprint& bp = blueprint(kind);
  const std::array scenario{PortScenario::source(bp.heavy),
                            PortScenario::sink()};
  const Harness h = harness(bp, scenario);
  const VertexId sink_end = h.corridors[1].back();
  const PartRef part{kind, 0, bp.size()};
  return first_matching(h, [&](std::span<const std::uint32_t> pattern) {
    return color_of_class(pattern[sink_end]) == bp.heavy &&
           direction_of(bp, restrict_colors(pattern, part)) ==
               EdgeDirection::TowardPort1;
  });
}

ColorPattern simulate_and_release() {
  const GadgetBlueprint& bp = blueprint(GadgetKind::AndVertex);
  const std::array scenario{PortScenario::sink(), PortScenario::sealed(),
                            PortScenario::sealed()};
  const Harness h = harness(bp, scenario);
  const VertexId sink_end = h.corridors[0].back();
  return first_matching(h, [&](std::span<const std::uint32_t> pattern) {
    return color_of_class(pattern[sink_end]) == Color::Blue;
  });
}

}  // namespace

const ColorPattern& edge_canonical(GadgetKind kind, EdgeDirection d) {
  if (!is_edge_gadget(kind)) {
    throw InputError("edge_canonical needs an edge gadget kind");
  }
  if (d == EdgeDirection::Transitional) {
    throw InputError("no canonical placement for a transitional gadget");
  }
  if (d == EdgeDirection::TowardPort0) return blueprint(kind).initial_colors;
  static std::once_flag once;
  static std::array<ColorPattern, 2> released;
  std::call_once(once, [] {
    released[0] = simulate_edge_release(GadgetKind::BlueEdge);
    released[1] = simulate_edge_release(GadgetKind::RedEdge);
  });
  return released[kind == GadgetKind::BlueEdge ? 0 : 1];
}

ColorPattern or_placement(std::span<const bool> inward) {
  const GadgetBlueprint& bp = blueprint(GadgetKind::OrVertex);
  if (inward.size() != bp.ports.size()) {
    throw InputError("OR placement needs three port flags");
  }
  const auto in = std::count(inward.begin(), inward.end(), true);
  if (in == 0) throw InputError("OR vertex with no inward edge");
  ColorPattern colors(bp.size(), Color::LightBlue);
  const std::array slots{bp.at("blue_slot_1"), bp.at("blue_slot_2")};
  for (long i = 0; i + 1 < in; ++i) colors[slots[i]] = Color::Blue;
  return colors;
}

ColorPattern and_placement(bool blue_in, bool red_a_in, bool red_b_in) {
  const GadgetBlueprint& bp = blueprint(GadgetKind::AndVertex);
  if (!blue_in && !(red_a_in && red_b_in)) {
    throw InputError("AND vertex needs its blue edge or both red edges inward");
  }
  if (!blue_in) {
    static const ColorPattern released = simulate_and_release();
    return released;
  }
  ColorPattern colors = bp.initial_colors;
  if (!red_a_in) colors[bp.ports[bp.port_index("red_a")].location] = Color::LightRed;
  if (!red_b_in) colors[bp.ports[bp.port_index("red_b")].location] = Color::LightRed;
  return colors;
}

}  // namespace fas::gadgets
