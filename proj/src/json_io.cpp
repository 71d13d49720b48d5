#include "fas/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fas/errors.hpp"

namespace fas::io {

namespace {

template <class T>
T get_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<VertexId> id_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<VertexId> out;
  for (const Json& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
      throw InputError(std::string(what) + " holds a non-index entry");
    }
    out.push_back(x.get<VertexId>());
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, dump(j));
}

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["order"] = g.order();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
    j["labels"] = std::move(labels);
  }
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  const auto order = get_as<std::size_t>(j, "order");
  std::vector<Edge> edges;
  const Json& es = j.contains("edges") ? j.at("edges") : Json::array();
  if (!es.is_array()) throw InputError("'edges' must be an array");
  for (const Json& e : es) {
    const auto pair = id_list(e, "edge");
    if (pair.size() != 2) throw InputError("an edge needs two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  std::map<VertexId, std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_object()) throw InputError("'labels' must be an object");
    for (const auto& [k, v] : j.at("labels").items()) {
      std::size_t pos = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(k, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != k.size() || !v.is_string()) {
        throw InputError("bad label entry '" + k + "'");
      }
      labels[static_cast<VertexId>(id)] = v.get<std::string>();
    }
  }
  for (const auto& [v, _] : labels) {
    if (v >= order) throw InputError("label for vertex outside the graph");
  }
  return SimpleGraph(order, edges, std::move(labels));
}

Json fas_file_to_json(const FasInstanceFile& f,
                      const std::optional<gadgets::ColorPattern>& colors) {
  Json j;
  j["X"] = graph_to_json(f.instance.locations());
  j["Y"] = graph_to_json(f.instance.people());
  j["sigma"] = std::vector<VertexId>(f.sigma.assignment().begin(),
                                     f.sigma.assignment().end());
  j["sigma_prime"] = std::vector<VertexId>(f.sigma_prime.assignment().begin(),
                                           f.sigma_prime.assignment().end());
  if (colors) {
    Json cs = Json::array();
    for (gadgets::Color c : *colors) cs.push_back(gadgets::to_string(c));
    j["colors"] = std::move(cs);
  } else if (f.classing) {
    j["colors"] = std::vector<std::uint32_t>(f.classing->classes().begin(),
                                             f.classing->classes().end());
  }
  return j;
}

FasInstanceFile fas_file_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  for (const char* key : {"X", "Y", "sigma", "sigma_prime"}) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  }
  FasInstanceFile f;
  f.instance = FasInstance(graph_from_json(j.at("X")), graph_from_json(j.at("Y")));
  f.sigma = Configuration(id_list(j.at("sigma"), "sigma"));
  f.sigma_prime = Configuration(id_list(j.at("sigma_prime"), "sigma_prime"));
  if (f.sigma.size() != f.instance.order() ||
      f.sigma_prime.size() != f.instance.order()) {
    throw InputError("configurations must cover every location");
  }
  if (j.contains("colors")) {
    const Json& cs = j.at("colors");
    if (!cs.is_array() || cs.size() != f.instance.order()) {
      throw InputError("'colors' needs one entry per person");
    }
    std::vector<std::uint32_t> ids;
    std::uint32_t count = 0;
    for (const Json& c : cs) {
      std::uint32_t id = 0;
      if (c.is_string()) {
        id = static_cast<std::uint32_t>(
            gadgets::color_from_string(c.get<std::string>()));
      } else if (c.is_number_unsigned() ||
                 (c.is_number_integer() && c.get<long long>() >= 0)) {
        id = c.get<std::uint32_t>();
      } else {
        throw InputError("color entries must be names or class ids");
      }
      ids.push_back(id);
      count = std::max(count, id + 1);
    }
    f.classing = ColorClassing(std::move(ids), count);
  }
  return f;
}

Json witness_to_json(std::span<const SwapMove> moves) {
  Json j = Json::array();
  for (const SwapMove& m : moves) j.push_back({m.loc_a, m.loc_b});
  return j;
}

std::vector<SwapMove> witness_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("witness must be an array");
  std::vector<SwapMove> out;
  for (const Json& m : j) {
    const auto pair = id_list(m, "swap");
    if (pair.size() != 2) throw InputError("a swap needs two locations");
    out.push_back({std::min(pair[0], pair[1]), std::max(pair[0], pair[1])});
  }
  return out;
}

Json flips_to_json(std::span<const ncl::FlipMove> flips) {
  Json j = Json::array();
  for (const ncl::FlipMove& f : flips) j.push_back(f.edge);
  return j;
}

Json orientation_to_json(const ncl::Orientation& o) {
  Json j = Json::array();
  for (bool b : o.bits()) j.push_back(b ? 1 : 0);
  return j;
}

ncl::Orientation orientation_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("orientation must be an array of 0/1");
  std::vector<bool> bits;
  for (const Json& b : j) {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
      throw InputError("orientation entries must be 0 or 1");
    }
    bits.push_back(b.get<int>() == 1);
  }
  return ncl::Orientation(std::move(bits));
}

Json ncl_to_json(const ncl::NclGraph& g,
                 const std::optional<ncl::Orientation>& from,
                 const std::optional<ncl::Orientation>& to) {
  Json j;
  Json vs = Json::array();
  for (auto k : g.kinds()) vs.push_back(ncl::to_string(k));
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({e.u, e.v, e.weight});
  j["edges"] = std::move(es);
  if (from) j["orientation_from"] = orientation_to_json(*from);
  if (to) j["orientation_to"] = orientation_to_json(*to);
  return j;
}

NclInstanceFile ncl_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("NCL instance must be a JSON object");
  std::vector<ncl::VertexKind> kinds;
  for (const Json& k : get_as<Json>(j, "vertices")) {
    const std::string s = k.is_string() ? k.get<std::string>() : "";
    if (s == "AND") kinds.push_back(ncl::VertexKind::And);
    else if (s == "OR") kinds.push_back(ncl::VertexKind::Or);
    else throw InputError("vertex kinds must be \"AND\" or \"OR\"");
  }
  std::vector<ncl::NclEdge> edges;
  for (const Json& e : get_as<Json>(j, "edges")) {
    const auto t = id_list(e, "edge");
    if (t.size() != 3) throw InputError("an NCL edge is [u, v, weight]");
    edges.push_back({t[0], t[1], static_cast<int>(t[2])});
  }
  NclInstanceFile f{ncl::NclGraph(std::move(kinds), std::move(edges)), {}, {}};
  auto read = [&](const char* key) -> std::optional<ncl::Orientation> {
    if (!j.contains(key)) return std::nullopt;
    ncl::Orientation o = orientation_from_json(j.at(key));
    if (o.size() != f.graph.edge_count()) {
      throw InputError(std::string("'") + key + "' needs one bit per edge");
    }
    return o;
  };
  f.from = read("orientation_from");
  f.to = read("orientation_to");
  return f;
}

Json bundle_to_json(const reduction::ReductionArtifact& art) {
  FasInstanceFile f{art.fas, art.sigma, art.sigma_prime, art.classing};
  Json j;
  j["fas"] = fas_file_to_json(f, art.colors);
  j["sigma"] = j["fas"]["sigma"];
  j["sigma_prime"] = j["fas"]["sigma_prime"];
  j["colors"] = j["fas"]["colors"];
  auto part_json = [&](std::size_t index) {
    const gadgets::PartRef& p = art.assembly.part(index);
    Json pj;
    pj["gadget"] = gadgets::to_string(p.kind);
    pj["offset"] = p.offset;
    pj["size"] = p.size;
    return pj;
  };
  Json em = Json::object();
  for (std::size_t e = 0; e < art.edge_map.size(); ++e) {
    const auto& ref = art.edge_map[e];
    Json ej = part_json(ref.part);
    ej["slots"] = {ref.slot[0], ref.slot[1]};
    ej["port_links"] = {{ref.port_pairing[0].first, ref.port_pairing[0].second},
                        {ref.port_pairing[1].first, ref.port_pairing[1].second}};
    em[std::to_string(e)] = std::move(ej);
  }
  Json vm = Json::object();
  for (std::size_t v = 0; v < art.vertex_map.size(); ++v) {
    const auto& ref = art.vertex_map[v];
    Json vj = part_json(ref.part);
    vj["port_edges"] = ref.port_edges;
    vm[std::to_string(v)] = std::move(vj);
  }
  j["edge_map"] = std::move(em);
  j["vertex_map"] = std::move(vm);
  j["ncl"] = ncl_to_json(art.ncl, art.from, art.to);
  if (art.planar_input) j["planar_input"] = *art.planar_input;
  return j;
}

Json blueprint_to_json(const gadgets::GadgetBlueprint& bp) {
  Json j;
  j["kind"] = gadgets::to_string(bp.kind);
  j["heavy"] = gadgets::to_string(bp.heavy);
  Json locs = Json::array();
  for (VertexId i = 0; i < bp.size(); ++i) {
    Json l;
    l["id"] = i;
    l["name"] = bp.info[i].name;
    l["x"] = bp.info[i].x;
    l["y"] = bp.info[i].y;
    l["color"] = gadgets::to_string(bp.initial_colors[i]);
    locs.push_back(std::move(l));
  }
  j["locations"] = std::move(locs);
  Json es = Json::array();
  for (const Edge& e : bp.locations.edges()) es.push_back({e.first, e.second});
  j["edges"] = std::move(es);
  Json ports = Json::array();
  for (const auto& p : bp.ports) {
    ports.push_back({{"name", p.name},
                     {"location", p.location},
                     {"corridor_color", gadgets::to_string(p.light)}});
  }
  j["ports"] = std::move(ports);
  Json named = Json::object();
  for (const auto& [name, loc] : bp.named) named[name] = loc;
  j["named"] = std::move(named);
  return j;
}

std::string blueprint_to_dot(const gadgets::GadgetBlueprint& bp) {
  std::vector<std::string> fills, names;
  for (VertexId i = 0; i < bp.size(); ++i) {
    fills.emplace_back(gadgets::dot_color(bp.initial_colors[i]));
    names.push_back(bp.info[i].name);
  }
  std::string name(gadgets::to_string(bp.kind));
  return to_dot(bp.locations, fills, names, name);
}

namespace {

Json pair_json(const verify::EquivalenceReport& r, const verify::PairOutcome& p) {
  Json j;
  j["from"] = orientation_to_json(r.orientations[p.from]);
  j["to"] = orientation_to_json(r.orientations[p.to]);
  j["ncl"] = to_string(p.ncl);
  j["fas"] = to_string(p.fas);
  j["ncl_witness"] = p.ncl_witness ? flips_to_json(*p.ncl_witness) : Json();
  j["fas_witness"] = p.fas_witness ? witness_to_json(*p.fas_witness) : Json();
  return j;
}

}  // namespace

Json report_to_json(const verify::EquivalenceReport& r) {
  Json j;
  j["instance"] = r.description;
  j["valid_orientations"] = r.orientations.size();
  j["reduced_locations"] = r.fas_order;
  j["pairs_tested"] = r.pairs_tested;
  j["agreements"] = r.agreements;
  j["skipped"] = r.skipped;
  j["completed"] = r.completed();
  j["min_completed_pairs"] = r.min_completed_pairs;
  j["reachable_pairs"] = r.reachable_pairs;
  Json ds = Json::array();
  for (const auto& d : r.disagreements) ds.push_back(pair_json(r, d));
  j["disagreements"] = std::move(ds);
  j["witnesses_checked"] = r.witnesses_checked;
  j["witness_failures"] = r.witness_failures;
  j["invalid_settled_states"] = r.invalid_settled_states;
  j["stats"] = {{"fas_components", r.fas_components},
                {"fas_states", r.fas_states},
                {"ncl_states", r.ncl_states}};
  j["passed"] = r.passed();
  return j;
}

Json report_to_json(const verify::GadgetReport& r) {
  Json j;
  j["gadget"] = gadgets::to_string(r.kind);
  Json props = Json::array();
  for (const auto& p : r.properties) {
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}});
  }
  j["properties"] = std::move(props);
  j["states_scanned"] = r.states_scanned;
  j["passed"] = r.passed();
  return j;
}

}  // namespace fas::io
