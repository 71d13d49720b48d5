#include "fas/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <sstream>

#include "json.hpp"

#include "fas/errors.hpp"

namespace fas::verify {

using gadgets::Color;
using gadgets::ColorPattern;
using gadgets::EdgeDirection;
using gadgets::GadgetKind;
using gadgets::PortScenario;

StateSet brute_force_fs(const FasInstance& inst, const Configuration& from,
                        const std::optional<ColorClassing>& quotient,
                        std::size_t cap) {
  const std::size_t n = inst.order();
  if (from.size() != n) throw InputError("configuration size mismatch");
  // rep[s] is a person carrying symbol s; friendship is read off the reps.
  std::vector<std::uint32_t> start(n);
  std::map<std::uint32_t, VertexId> rep;
  for (VertexId loc = 0; loc < n; ++loc) {
    const VertexId p = from.person_at(loc);
    const std::uint32_t sym = quotient ? quotient->class_of(p) : p;
    start[loc] = sym;
    rep.emplace(sym, p);
  }
  StateSet seen{start};
  std::queue<std::vector<std::uint32_t>> queue;
  queue.push(start);
  while (!queue.empty()) {
    std::vector<std::uint32_t> s = std::move(queue.front());
    queue.pop();
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!inst.locations().adjacent(a, b) || s[a] == s[b]) continue;
        if (!inst.people().adjacent(rep.at(s[a]), rep.at(s[b]))) continue;
        std::swap(s[a], s[b]);
        if (seen.insert(s).second) {
          if (seen.size() > cap) {
            throw ResourceLimitError("brute-force oracle exceeded " +
                                     std::to_string(cap) + " states");
          }
          queue.push(s);
        }
        std::swap(s[a], s[b]);
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------

bool GadgetReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

namespace {

Exploration explore_colored(const gadgets::ColoredInstance& ci,
                            const SuiteOptions& opts) {
  SearchOptions so = SearchOptions::quotient_by(ci.classing);
  so.max_states = opts.max_states;
  return explore(ci.instance, ci.start, so);
}

PropertyResult incomplete(std::string name, const Exploration& ex) {
  return {std::move(name), false,
          "state cap reached after " + std::to_string(ex.size()) + " states"};
}

std::array<PortScenario, 2> transit_scenario(const gadgets::GadgetBlueprint& bp) {
  return {PortScenario::source(bp.heavy), PortScenario::sink()};
}

std::uint32_t color_id(Color c) { return static_cast<std::uint32_t>(c); }

}  // namespace

PropertyResult sealed_rigidity(GadgetKind kind, const SuiteOptions& opts) {
  const auto& bp = gadgets::blueprint(kind);
  const std::vector<PortScenario> scenario(bp.ports.size(),
                                           PortScenario::sealed());
  const gadgets::Harness h = gadgets::harness(bp, scenario);
  const Exploration ex = explore_colored(h.colored, opts);
  const std::string name = "sealed rigidity";
  if (!ex.complete()) return incomplete(name, ex);
  return {name, ex.size() == 1,
          "quotient reachable set size " + std::to_string(ex.size())};
}

std::vector<PropertyResult> edge_transit_properties(GadgetKind kind,
                                                    std::uint64_t* states,
                                                    const SuiteOptions& opts) {
  if (!gadgets::is_edge_gadget(kind)) {
    throw InputError("edge transit check needs an edge gadget");
  }
  const auto& bp = gadgets::blueprint(kind);
  const auto scenario = transit_scenario(bp);
  const gadgets::Harness h = gadgets::harness(bp, scenario);
  const Exploration ex = explore_colored(h.colored, opts);
  if (states) *states += ex.size();
  if (!ex.complete()) {
    return {incomplete("conservation", ex), incomplete("release reachable", ex),
            incomplete("release implies lock", ex),
            incomplete("classifier coverage", ex)};
  }
  const gadgets::PartRef part{kind, 0, bp.size()};
  const std::uint32_t heavy = color_id(bp.heavy);
  const VertexId alpha = bp.at("alpha");
  std::array<std::uint64_t, gadgets::kColorCount> expected{};
  for (Color c : h.colored.colors) ++expected[static_cast<std::size_t>(c)];

  std::uint64_t conservation_bad = 0, released = 0, released_unlocked = 0;
  std::array<std::uint64_t, 3> by_direction{};
  ex.for_each([&](std::size_t, std::span<const std::uint32_t> p) {
    std::array<std::uint64_t, gadgets::kColorCount> count{};
    for (std::uint32_t s : p) ++count[s];
    if (count != expected) ++conservation_bad;
    const bool out = std::any_of(
        h.corridors[1].begin(), h.corridors[1].end(),
        [&](VertexId loc) { return p[loc] == heavy; });
    if (out) {
      ++released;
      if (p[alpha] != heavy) ++released_unlocked;
    }
    ++by_direction[static_cast<std::size_t>(
        gadgets::direction_of(bp, gadgets::restrict_colors(p, part)))];
  });

  std::vector<PropertyResult> out;
  out.push_back({"conservation", conservation_bad == 0,
                 std::to_string(conservation_bad) + " of " +
                     std::to_string(ex.size()) + " states change a color count"});
  out.push_back({"release reachable", released > 0,
                 std::to_string(released) + " states with the heavy token in "
                                            "the sink corridor"});
  out.push_back({"release implies lock", released > 0 && released_unlocked == 0,
                 std::to_string(released_unlocked) +
                     " released states without the heavy token on alpha"});
  std::ostringstream detail;
  detail << "toward port 0: " << by_direction[0]
         << ", toward port 1: " << by_direction[1]
         << ", transitional: " << by_direction[2];
  out.push_back({"classifier coverage",
                 by_direction[0] > 0 && by_direction[1] > 0 &&
                     by_direction[0] + by_direction[1] + by_direction[2] ==
                         ex.size(),
                 detail.str()});
  return out;
}

PropertyResult edge_no_spontaneous_release(GadgetKind kind,
                                           const SuiteOptions& opts) {
  const auto& bp = gadgets::blueprint(kind);
  const std::array scenario{PortScenario::sink(), PortScenario::sink()};
  const gadgets::Harness h = gadgets::harness(bp, scenario);
  const Exploration ex = explore_colored(h.colored, opts);
  const std::string name = "no release without a source";
  if (!ex.complete()) return incomplete(name, ex);
  const std::uint32_t heavy = color_id(bp.heavy);
  std::uint64_t escaped = 0;
  ex.for_each([&](std::size_t, std::span<const std::uint32_t> p) {
    for (const auto& corridor : h.corridors) {
      for (VertexId loc : corridor) {
        if (p[loc] == heavy) {
          ++escaped;
          return;
        }
      }
    }
  });
  return {name, escaped == 0,
          std::to_string(escaped) + " of " + std::to_string(ex.size()) +
              " states put the heavy token in a corridor"};
}

PropertyResult red_blue_isomorphism(const SuiteOptions& opts) {
  const std::string name = "red/blue isomorphism";
  const auto& blue = gadgets::blueprint(GadgetKind::BlueEdge);
  const auto& red = gadgets::blueprint(GadgetKind::RedEdge);
  if (!(blue.locations == red.locations) ||
      gadgets::blue_to_red(blue.initial_colors) != red.initial_colors ||
      blue.named != red.named || blue.ports.size() != red.ports.size()) {
    return {name, false, "renamed blue blueprint differs from the red one"};
  }
  for (std::size_t i = 0; i < blue.ports.size(); ++i) {
    const Color renamed = gadgets::blue_to_red(std::array{blue.ports[i].light})[0];
    if (blue.ports[i].location != red.ports[i].location ||
        renamed != red.ports[i].light) {
      return {name, false, "port " + std::to_string(i) + " differs"};
    }
  }

  const gadgets::Harness hb = gadgets::harness(blue, transit_scenario(blue));
  const gadgets::Harness hr = gadgets::harness(red, transit_scenario(red));
  const Exploration eb = explore_colored(hb.colored, opts);
  const Exploration er = explore_colored(hr.colored, opts);
  if (!eb.complete() || !er.complete()) return incomplete(name, eb);
  if (eb.size() != er.size()) {
    return {name, false,
            "state counts differ: " + std::to_string(eb.size()) + " vs " +
                std::to_string(er.size())};
  }
  std::array<std::uint32_t, gadgets::kColorCount> rename{};
  for (std::uint32_t c = 0; c < gadgets::kColorCount; ++c) {
    rename[c] = color_id(
        gadgets::blue_to_red(std::array{gadgets::color_of_class(c)})[0]);
  }
  // Map every blue state to its renamed red state, then compare adjacency.
  std::vector<std::size_t> image(eb.size());
  std::vector<bool> hit(er.size(), false);
  std::optional<std::string> failure;
  eb.for_each([&](std::size_t i, std::span<const std::uint32_t> p) {
    if (failure) return;
    std::vector<std::uint32_t> q(p.begin(), p.end());
    for (auto& s : q) s = rename[s];
    const auto j = er.find_pattern(q);
    if (!j || hit[*j]) {
      failure = "blue state " + std::to_string(i) + " has no distinct image";
      return;
    }
    hit[*j] = true;
    image[i] = *j;
  });
  if (failure) return {name, false, *failure};
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < eb.size(); ++i) {
    std::vector<std::size_t> mapped;
    for (std::size_t k : eb.successors(i)) mapped.push_back(image[k]);
    std::vector<std::size_t> theirs = er.successors(image[i]);
    std::sort(mapped.begin(), mapped.end());
    std::sort(theirs.begin(), theirs.end());
    if (mapped != theirs) {
      return {name, false,
              "adjacency differs at blue state " + std::to_string(i)};
    }
    edges += mapped.size();
  }
  return {name, true,
          std::to_string(eb.size()) + " states and " +
              std::to_string(edges / 2) + " transitions correspond"};
}

VertexAssembly vertex_assembly(GadgetKind vertex_kind) {
  if (gadgets::is_edge_gadget(vertex_kind)) {
    throw InputError("vertex assembly needs a vertex gadget");
  }
  const auto& vbp = gadgets::blueprint(vertex_kind);
  VertexAssembly va;
  va.vertex_part = va.assembly.add(vertex_kind);
  ColorPattern colors = vbp.initial_colors;
  for (std::size_t port = 0; port < vbp.ports.size(); ++port) {
    const GadgetKind ek = vbp.ports[port].light == Color::LightBlue
                              ? GadgetKind::BlueEdge
                              : GadgetKind::RedEdge;
    const std::size_t part = va.assembly.add(ek);
    va.assembly.connect(part, 0, va.vertex_part, port);
    va.edge_parts.push_back(part);
    const auto& drawn = gadgets::blueprint(ek).initial_colors;
    colors.insert(colors.end(), drawn.begin(), drawn.end());
  }
  va.colored = gadgets::colored_instance(va.assembly.graph(), colors);
  return va;
}

OutwardScan scan_outward(const VertexAssembly& va, const SuiteOptions& opts) {
  const Exploration ex = explore_colored(va.colored, opts);
  OutwardScan scan;
  scan.complete = ex.complete();
  scan.states = ex.size();
  ex.for_each([&](std::size_t, std::span<const std::uint32_t> p) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < va.edge_parts.size(); ++i) {
      const auto& part = va.assembly.part(va.edge_parts[i]);
      const EdgeDirection d = gadgets::direction_of(
          gadgets::blueprint(part.kind), gadgets::restrict_colors(p, part));
      if (d == EdgeDirection::TowardPort1) mask |= 1u << i;
    }
    scan.outward_masks.insert(mask);
  });
  return scan;
}

namespace {

std::string mask_list(const std::set<std::uint32_t>& masks) {
  std::string s;
  for (std::uint32_t m : masks) {
    if (!s.empty()) s += ' ';
    for (int i = 0; i < 3; ++i) s += (m >> i & 1) ? 'O' : 'i';
  }
  return "outward patterns seen (port order): " + s;
}

}  // namespace

std::vector<PropertyResult> or_properties(std::uint64_t* states,
                                          const SuiteOptions& opts) {
  const OutwardScan scan = scan_outward(vertex_assembly(GadgetKind::OrVertex), opts);
  if (states) *states += scan.states;
  const std::string detail = mask_list(scan.outward_masks);
  if (!scan.complete) {
    return {{"never three outward", false, "state cap reached"},
            {"any two outward", false, "state cap reached"}};
  }
  const bool none3 = !scan.outward_masks.contains(0b111);
  bool pairs = true;
  for (std::uint32_t m : {0b011u, 0b101u, 0b110u}) {
    pairs = pairs && scan.outward_masks.contains(m);
  }
  return {{"never three outward", none3, detail},
          {"any two outward", pairs, detail}};
}

std::vector<PropertyResult> and_properties(std::uint64_t* states,
                                           const SuiteOptions& opts) {
  const OutwardScan scan =
      scan_outward(vertex_assembly(GadgetKind::AndVertex), opts);
  if (states) *states += scan.states;
  const std::string detail = mask_list(scan.outward_masks);
  if (!scan.complete) {
    return {{"exclusivity", false, "state cap reached"},
            {"both reds out", false, "state cap reached"},
            {"blue out", false, "state cap reached"}};
  }
  const auto& m = scan.outward_masks;
  const bool reds = std::any_of(m.begin(), m.end(),
                                [](std::uint32_t x) { return (x & 0b110) == 0b110; });
  const bool blue = std::any_of(m.begin(), m.end(),
                                [](std::uint32_t x) { return (x & 1) != 0; });
  return {{"exclusivity", !m.contains(0b111), detail},
          {"both reds out", reds, detail},
          {"blue out", blue, detail}};
}

GadgetReport gadget_suite(GadgetKind kind, const SuiteOptions& opts) {
  GadgetReport r;
  r.kind = kind;
  r.properties.push_back(sealed_rigidity(kind, opts));
  std::vector<PropertyResult> more;
  switch (kind) {
    case GadgetKind::BlueEdge:
    case GadgetKind::RedEdge:
      more = edge_transit_properties(kind, &r.states_scanned, opts);
      more.push_back(edge_no_spontaneous_release(kind, opts));
      more.push_back(red_blue_isomorphism(opts));
      break;
    case GadgetKind::OrVertex:
      more = or_properties(&r.states_scanned, opts);
      break;
    case GadgetKind::AndVertex:
      more = and_properties(&r.states_scanned, opts);
      break;
  }
  r.properties.insert(r.properties.end(), more.begin(), more.end());
  return r;
}

// ---------------------------------------------------------------------------

EquivalenceOptions load_equivalence_options(const std::string& path,
                                            PairSource* sampling) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config file " + path + ": " + e.what());
  }
  EquivalenceOptions o;
  o.fas_max_states = j.value("fas_max_states", o.fas_max_states);
  o.ncl_max_states = j.value("ncl_max_states", o.ncl_max_states);
  o.translate_max_states_per_flip =
      j.value("translate_max_states_per_flip", o.translate_max_states_per_flip);
  o.min_completed_pairs = j.value("min_completed_pairs", o.min_completed_pairs);
  o.check_witnesses = j.value("check_witnesses", o.check_witnesses);
  if (sampling) {
    sampling->count = j.value("samples", sampling->count);
    sampling->seed = j.value("seed", sampling->seed);
  }
  return o;
}

namespace {

/// Can `to` be reached from `from` by flipping each edge of their symmetric
/// difference exactly once, in some legal order?
bool joined_by_flips(const ncl::NclGraph& g, const ncl::Orientation& from,
                     const ncl::Orientation& to) {
  std::vector<std::uint32_t> diff;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (from.toward_v(e) != to.toward_v(e)) diff.push_back(e);
  }
  if (diff.size() > 20) return false;
  const std::uint32_t full = (1u << diff.size()) - 1;
  std::vector<bool> seen(full + 1, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::uint32_t done = stack.back();
    stack.pop_back();
    if (done == full) return true;
    ncl::Orientation o = from;
    for (std::size_t k = 0; k < diff.size(); ++k) {
      if (done >> k & 1) o.flip(diff[k]);
    }
    for (std::size_t k = 0; k < diff.size(); ++k) {
      const std::uint32_t next = done | (1u << k);
      if (next == done || seen[next]) continue;
      if (ncl::is_legal_flip(g, o, {diff[k]})) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return false;
}

std::string bits_text(const ncl::Orientation& o) {
  std::string s;
  for (bool b : o.bits()) s += b ? '1' : '0';
  return s;
}

}  // namespace

std::optional<std::string> check_fas_witness_projection(
    const reduction::ReductionArtifact& art, const Configuration& start,
    std::span<const SwapMove> moves) {
  Configuration c = start;
  std::optional<ncl::Orientation> last = reduction::config_to_orientation(art, c);
  if (!last) return "witness starts in a transitional state";
  if (!ncl::is_valid(art.ncl, *last)) return "witness starts invalid";
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      c = apply_swap_checked(art.fas, c, moves[i]);
    } catch (const MoveError& e) {
      return "swap " + std::to_string(i) + ": " + e.what();
    }
    const auto o = reduction::config_to_orientation(art, c);
    if (!o || *o == *last) continue;
    if (!ncl::is_valid(art.ncl, *o)) {
      return "after swap " + std::to_string(i) + " orientation " +
             bits_text(*o) + " is invalid";
    }
    if (!joined_by_flips(art.ncl, *last, *o)) {
      return "after swap " + std::to_string(i) + " orientation " +
             bits_text(*last) + " -> " + bits_text(*o) +
             " is not a legal flip sequence";
    }
    last = o;
  }
  return std::nullopt;
}

EquivalenceReport equivalence_test(const ncl::NclGraph& g, PairSource source,
                                   const EquivalenceOptions& opts,
                                   std::string description) {
  EquivalenceReport rep;
  rep.description = std::move(description);
  rep.min_completed_pairs = opts.min_completed_pairs;
  const ncl::ValidOrientations valid = ncl::enumerate_valid(g, true);
  rep.orientations = valid.list;
  const std::size_t n = valid.list.size();
  if (n == 0) return rep;
  if (n != valid.count) {
    throw ResourceLimitError("too many valid orientations to list");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (source.kind == PairSource::Kind::Exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    std::mt19937_64 rng(source.seed);
    for (std::size_t k = 0; k < source.count; ++k) {
      pairs.emplace_back(rng() % n, rng() % n);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  const reduction::ReductionArtifact art =
      reduction::reduce(g, valid.list[0], valid.list[0]);
  rep.fas_order = art.fas.order();
  std::vector<Configuration> canon;
  std::vector<std::vector<std::uint32_t>> canon_pattern;
  for (const auto& o : valid.list) {
    canon.push_back(reduction::orientation_to_config(art, o));
    canon_pattern.push_back(art.classing.pattern(canon.back()));
  }

  // Components are shared between orientations that reach each other.
  std::vector<std::unique_ptr<Exploration>> comps;
  std::vector<std::optional<std::size_t>> comp_of(n);
  auto component = [&](std::size_t i) -> const Exploration& {
    if (!comp_of[i]) {
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (comps[k]->complete() && comps[k]->find_pattern(canon_pattern[i])) {
          comp_of[i] = k;
          break;
        }
      }
    }
    if (!comp_of[i]) {
      SearchOptions so = SearchOptions::quotient_by(art.classing);
      so.max_states = opts.fas_max_states;
      auto ex = std::make_unique<Exploration>(explore(art.fas, canon[i], so));
      rep.fas_states += ex->size();
      ex->for_each([&](std::size_t, std::span<const std::uint32_t> p) {
        const auto o = reduction::pattern_to_orientation(art, p);
        if (o && !ncl::is_valid(g, *o)) ++rep.invalid_settled_states;
      });
      comp_of[i] = comps.size();
      comps.push_back(std::move(ex));
    }
    return *comps[*comp_of[i]];
  };

  reduction::TranslateOptions to;
  to.max_states_per_flip = opts.translate_max_states_per_flip;
  ncl::NclSearchOptions nso;
  nso.max_states = opts.ncl_max_states;

  for (const auto& [i, j] : pairs) {
    ++rep.pairs_tested;
    PairOutcome out;
    out.from = i;
    out.to = j;
    const ncl::NclResult nr = ncl::solve_c2c(g, valid.list[i], valid.list[j], nso);
    rep.ncl_states += nr.states_explored;
    out.ncl = nr.status;

    const Exploration& ex = component(i);
    const auto root_to_i = ex.find_pattern(canon_pattern[i]);
    const auto root_to_j = ex.find_pattern(canon_pattern[j]);
    if (root_to_j) {
      out.fas = SearchStatus::Reachable;
      std::vector<SwapMove> w = ex.path_to(*root_to_i);
      std::reverse(w.begin(), w.end());
      const std::vector<SwapMove> tail = ex.path_to(*root_to_j);
      w.insert(w.end(), tail.begin(), tail.end());
      out.fas_witness = std::move(w);
    } else {
      out.fas = ex.complete() ? SearchStatus::Unreachable : SearchStatus::Limit;
    }
    if (nr.witness) out.ncl_witness = nr.witness;

    if (out.ncl == SearchStatus::Limit || out.fas == SearchStatus::Limit) {
      ++rep.skipped;
      continue;
    }
    if (out.ncl == out.fas) {
      ++rep.agreements;
    } else {
      rep.disagreements.push_back(out);
    }
    if (out.ncl == SearchStatus::Reachable) ++rep.reachable_pairs;

    if (!opts.check_witnesses) continue;
    const std::string tag =
        "pair (" + std::to_string(i) + "," + std::to_string(j) + "): ";
    if (out.ncl_witness) {
      ++rep.witnesses_checked;
      try {
        ncl::replay(g, valid.list[i], *out.ncl_witness);
        const auto swaps = reduction::translate_witness(
            art, valid.list[i], canon[i], *out.ncl_witness, to);
        const Configuration end = replay(art.fas, canon[i], swaps);
        if (art.classing.pattern(end) != canon_pattern[j]) {
          rep.witness_failures.push_back(tag + "translated witness ends elsewhere");
        }
      } catch (const Error& e) {
        rep.witness_failures.push_back(tag + "translated witness: " + e.what());
      }
    }
    if (out.fas_witness) {
      ++rep.witnesses_checked;
      if (auto err = check_fas_witness_projection(art, canon[i], *out.fas_witness)) {
        rep.witness_failures.push_back(tag + "FAS witness: " + *err);
      } else {
        const Configuration end = replay(art.fas, canon[i], *out.fas_witness);
        if (art.classing.pattern(end) != canon_pattern[j]) {
          rep.witness_failures.push_back(tag + "FAS witness ends elsewhere");
        }
      }
    }
  }
  rep.fas_components = comps.size();
  return rep;
}

LabeledQuotientComparison compare_labeled_quotient(const FasInstance& inst,
                                                   const ColorClassing& cc,
                                                   const Configuration& from,
                                                   const Configuration& to,
                                                   std::uint64_t max_states) {
  SearchOptions lab = SearchOptions::labeled();
  lab.max_states = max_states;
  SearchOptions quo = SearchOptions::quotient_by(cc);
  quo.max_states = max_states;
  return {solve_c2c(inst, from, to, lab).status,
          solve_c2c(inst, from, to, quo).status};
}

std::string to_text(const EquivalenceReport& r) {
  std::ostringstream os;
  os << "instance: " << (r.description.empty() ? "(unnamed)" : r.description)
     << '\n'
     << "valid orientations: " << r.orientations.size() << '\n'
     << "reduced locations: " << r.fas_order << '\n'
     << "pairs tested: " << r.pairs_tested << '\n'
     << "agreements: " << r.agreements << '\n'
     << "disagreements: " << r.disagreements.size() << '\n'
     << "skipped: " << r.skipped << '\n'
     << "reachable pairs: " << r.reachable_pairs << '\n'
     << "witnesses checked: " << r.witnesses_checked << '\n'
     << "witness failures: " << r.witness_failures.size() << '\n'
     << "invalid settled states: " << r.invalid_settled_states << '\n'
     << "fas components explored: " << r.fas_components << '\n'
     << "fas states: " << r.fas_states << '\n'
     << "ncl states: " << r.ncl_states << '\n';
  for (const auto& d : r.disagreements) {
    os << "  disagreement " << bits_text(r.orientations[d.from]) << " -> "
       << bits_text(r.orientations[d.to]) << ": ncl " << to_string(d.ncl)
       << ", fas " << to_string(d.fas) << '\n';
  }
  for (const auto& f : r.witness_failures) os << "  " << f << '\n';
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string to_text(const GadgetReport& r) {
  std::ostringstream os;
  os << "gadget: " << gadgets::to_string(r.kind) << '\n';
  for (const auto& p : r.properties) {
    os << (p.passed ? "  PASS " : "  FAIL ") << p.name << ": " << p.detail
       << '\n';
  }
  os << "states scanned: " << r.states_scanned << '\n'
     << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace fas::verify
