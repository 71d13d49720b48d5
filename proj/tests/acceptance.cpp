// Acceptance criteria runner. `acceptance` runs all criteria, `acceptance 3 5`
// runs a subset. One PASS/FAIL line per criterion on stdout; exit status 1 if
// any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fas/errors.hpp"
#include "fas/json_io.hpp"
#include "fas/verifier.hpp"
#include "oracles.hpp"

using namespace fas;
using namespace fas::ncl;
namespace G = fas::gadgets;
namespace V = fas::verify;
namespace R = fas::reduction;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

NclGraph load_ncl(const std::string& name) {
  return io::ncl_from_json(io::read_json_file(std::string(FAS_DATA_DIR) + "/" + name))
      .graph;
}

NclGraph prism_or() {
  return NclGraph(std::vector<VertexKind>(6, VertexKind::Or),
                  {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}, {3, 4, 2}, {4, 5, 2},
                   {3, 5, 2}, {0, 3, 2}, {1, 4, 2}, {2, 5, 2}});
}

NclGraph k33_or() {
  std::vector<NclEdge> es;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) es.push_back({a, b, 2});
  }
  return NclGraph(std::vector<VertexKind>(6, VertexKind::Or), es);
}

std::string join(const std::vector<V::PropertyResult>& ps) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += "; ";
    s += p.name + (p.passed ? " ok" : " FAILED") + " (" + p.detail + ")";
  }
  return s;
}

bool all_passed(const std::vector<V::PropertyResult>& ps) {
  for (const auto& p : ps) {
    if (!p.passed) return false;
  }
  return !ps.empty();
}

// 1 -------------------------------------------------------------------------
Outcome friendship_matrix() {
  const io::Json t = io::read_json_file(std::string(FAS_DATA_DIR) + "/friendship_table.json");
  std::set<std::pair<G::Color, G::Color>> listed;
  for (const auto& p : t.at("friend_pairs")) {
    const G::Color a = G::color_from_string(p.at(0).get<std::string>());
    const G::Color b = G::color_from_string(p.at(1).get<std::string>());
    listed.insert({a, b});
    listed.insert({b, a});
  }
  int mismatches = 0, entries = 0;
  for (G::Color a : G::kAllColors) {
    for (G::Color b : G::kAllColors) {
      ++entries;
      const bool expect = a == b || listed.contains({a, b});
      if (G::friendship(a, b) != expect) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(entries - mismatches) + "/" +
                               std::to_string(entries) + " entries match the table"};
}

// 2 -------------------------------------------------------------------------
Outcome sealed_rigidity() {
  bool ok = true;
  std::string detail;
  for (G::GadgetKind k : {G::GadgetKind::BlueEdge, G::GadgetKind::RedEdge,
                          G::GadgetKind::OrVertex, G::GadgetKind::AndVertex}) {
    const auto p = V::sealed_rigidity(k);
    ok = ok && p.passed;
    if (!detail.empty()) detail += "; ";
    detail += std::string(G::to_string(k)) + " " + p.detail;
  }
  return {ok, detail};
}

// 3 -------------------------------------------------------------------------
Outcome edge_direction() {
  std::vector<V::PropertyResult> ps;
  for (G::GadgetKind k : {G::GadgetKind::BlueEdge, G::GadgetKind::RedEdge}) {
    for (auto& p : V::edge_transit_properties(k)) {
      p.name = std::string(G::to_string(k)) + " " + p.name;
      ps.push_back(std::move(p));
    }
  }
  return {all_passed(ps), join(ps)};
}

// 4 -------------------------------------------------------------------------
Outcome red_blue() {
  const auto p = V::red_blue_isomorphism();
  return {p.passed, p.detail};
}

// 5, 6 ----------------------------------------------------------------------
Outcome or_gadget() {
  V::SuiteOptions o;
  o.max_states = 10'000'000;
  std::uint64_t states = 0;
  const auto ps = V::or_properties(&states, o);
  return {all_passed(ps), join(ps) + "; " + std::to_string(states) + " states"};
}

Outcome and_gadget() {
  V::SuiteOptions o;
  o.max_states = 10'000'000;
  std::uint64_t states = 0;
  const auto ps = V::and_properties(&states, o);
  return {all_passed(ps), join(ps) + "; " + std::to_string(states) + " states"};
}

// 7 -------------------------------------------------------------------------
Outcome ncl_oracle() {
  const NclGraph g = load_ncl("triple_or.json");
  std::vector<oracle::NclEdgeSpec> spec;
  for (const auto& e : g.edges()) spec.push_back({e.u, e.v, e.weight});
  const oracle::FlipGraph fg = oracle::flip_graph(g.vertex_count(), spec);
  const auto valid = enumerate_valid(g, true);
  std::set<std::size_t> comps;
  for (const auto& [_, c] : fg.component) comps.insert(c);
  int agree = 0, pairs = 0;
  for (std::uint32_t a : fg.valid) {
    for (std::uint32_t b : fg.valid) {
      ++pairs;
      const auto r = solve_c2c(g, Orientation::from_bits(a, 3), Orientation::from_bits(b, 3));
      const bool expect = fg.component.at(a) == fg.component.at(b);
      if (r.status == (expect ? SearchStatus::Reachable : SearchStatus::Unreachable)) ++agree;
    }
  }
  const bool ok = valid.count == 6 && fg.valid.size() == 6 && comps.size() == 1 &&
                  agree == pairs && pairs == 36;
  return {ok, "valid " + std::to_string(valid.count) + ", flip graph components " +
                  std::to_string(comps.size()) + ", " + std::to_string(agree) + "/" +
                  std::to_string(pairs) + " pairs agree"};
}

// 8 -------------------------------------------------------------------------
Outcome end_to_end() {
  // No 3-regular graph has three vertices (odd degree sum), so the smallest
  // planar instances beyond the two-vertex pairs have four vertices.
  const std::vector<std::pair<std::string, NclGraph>> cases{
      {"triple-edge OR pair", load_ncl("triple_or.json")},
      {"triple-edge AND pair", load_ncl("triple_and.json")},
      {"K4 with OR vertices", load_ncl("k4_or.json")},
      {"4-cycle of AND/OR with doubled edges", load_ncl("and_or_mix.json")}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, g] : cases) {
    const auto r = V::equivalence_test(g, V::PairSource::exhaustive(), {}, name);
    ok = ok && r.passed() && r.disagreements.empty() && r.skipped == 0 &&
         g.vertex_count() != 0;
    if (!detail.empty()) detail += "; ";
    detail += name + ": " + std::to_string(r.pairs_tested) + " pairs, " +
              std::to_string(r.disagreements.size()) + " disagreements, " +
              std::to_string(r.skipped) + " skipped";
  }
  return {ok, detail};
}

// 9 -------------------------------------------------------------------------
Outcome output_structure() {
  const std::vector<std::pair<std::string, NclGraph>> cases{
      {"triple OR", load_ncl("triple_or.json")},
      {"triple AND", load_ncl("triple_and.json")},
      {"K4 OR", load_ncl("k4_or.json")},
      {"AND/OR mix", load_ncl("and_or_mix.json")},
      {"prism OR", prism_or()},
      {"K3,3 OR", k33_or()}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, g] : cases) {
    const auto valid = enumerate_valid(g, true);
    if (valid.list.empty()) {
      ok = false;
      detail += name + ": no valid orientation; ";
      continue;
    }
    const auto art = R::reduce(g, valid.list.front(), valid.list.back());
    const SimpleGraph& x = art.fas.locations();
    const std::size_t deg = max_degree(x);
    std::string planar = "n/a";
    bool case_ok = deg == 3;
    if (art.planar_input == true && x.order() <= kDefaultPlanarityCap) {
      const bool p = is_planar_small(x);
      planar = p ? "planar" : "NOT planar";
      case_ok = case_ok && p;
    }
    ok = ok && case_ok;
    detail += name + ": |X|=" + std::to_string(x.order()) + " maxdeg " +
              std::to_string(deg) + " " + planar + "; ";
  }
  return {ok, detail};
}

// 10, 11 --------------------------------------------------------------------

struct RandomFas {
  FasInstance inst;
  std::optional<ColorClassing> quotient;
};

RandomFas random_fas(std::mt19937_64& rng, int trial) {
  const std::size_t n = 2 + rng() % 5;
  std::vector<Edge> xe, ye;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng() % 2) xe.push_back({u, v});
    }
  }
  RandomFas r;
  if (trial % 4 == 3) {
    std::vector<G::Color> colors(n);
    for (auto& c : colors) c = G::kAllColors[rng() % G::kColorCount];
    const auto ci = G::colored_instance(SimpleGraph(n, xe), colors);
    r.inst = ci.instance;
    r.quotient = ci.classing;
  } else {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng() % 3) ye.push_back({u, v});
      }
    }
    r.inst = FasInstance(SimpleGraph(n, xe), SimpleGraph(n, ye));
  }
  return r;
}

Configuration random_config(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return Configuration(p);
}

Outcome solver_cross_validation() {
  std::mt19937_64 rng(20211);
  int pairs = 0, agree = 0, reachable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RandomFas rf = random_fas(rng, trial);
    const std::size_t n = rf.inst.order();
    for (int k = 0; k < 5; ++k) {
      const Configuration a = random_config(n, rng);
      const Configuration b = random_config(n, rng);
      const V::StateSet set = V::brute_force_fs(rf.inst, a, rf.quotient);
      std::vector<std::uint32_t> key;
      for (VertexId loc = 0; loc < n; ++loc) {
        const VertexId p = b.person_at(loc);
        key.push_back(rf.quotient ? rf.quotient->class_of(p) : p);
      }
      const bool expect = set.contains(key);
      SearchOptions o;
      o.quotient = rf.quotient;
      o.bidirectional = k % 2 == 1;
      const auto r = solve_c2c(rf.inst, a, b, o);
      ++pairs;
      if (r.status == (expect ? SearchStatus::Reachable : SearchStatus::Unreachable)) ++agree;
      if (expect) ++reachable;
      const auto comp = enumerate_component(rf.inst, a, o, 1'000'000);
      if (comp.size != set.size()) --agree;
    }
  }
  return {agree == pairs && pairs == 1000,
          std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree (" +
              std::to_string(reachable) + " reachable)"};
}

Outcome witness_integrity() {
  std::uint64_t returned = 0, replayed = 0;
  // FAS swaps from the engine.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const RandomFas rf = random_fas(rng, trial);
    for (int k = 0; k < 5; ++k) {
      const Configuration a = random_config(rf.inst.order(), rng);
      const Configuration b = random_config(rf.inst.order(), rng);
      SearchOptions o;
      o.quotient = rf.quotient;
      o.bidirectional = k % 2 == 0;
      const auto r = solve_c2c(rf.inst, a, b, o);
      if (!r.witness) continue;
      ++returned;
      try {
        const Configuration end = replay(rf.inst, a, *r.witness);
        const bool same = rf.quotient ? rf.quotient->pattern(end) == rf.quotient->pattern(b)
                                      : end == b;
        if (same) ++replayed;
      } catch (const MoveError&) {
      }
    }
  }
  // NCL flips.
  for (const char* name : {"triple_or.json", "k4_or.json", "and_or_mix.json"}) {
    const NclGraph g = load_ncl(name);
    const auto valid = enumerate_valid(g, true);
    for (const auto& a : valid.list) {
      for (const auto& b : valid.list) {
        const auto r = solve_c2c(g, a, b);
        if (!r.witness) continue;
        ++returned;
        try {
          if (replay(g, a, *r.witness) == b) ++replayed;
        } catch (const MoveError&) {
        }
      }
    }
  }
  // Translated witnesses (and projected FAS witnesses) through the verifier.
  std::uint64_t translated = 0, failures = 0;
  for (const char* name : {"triple_or.json", "and_or_mix.json"}) {
    const auto rep = V::equivalence_test(load_ncl(name), V::PairSource::exhaustive());
    translated += rep.witnesses_checked;
    failures += rep.witness_failures.size();
  }
  returned += translated;
  replayed += translated - failures;
  return {returned == replayed && translated > 0,
          std::to_string(replayed) + "/" + std::to_string(returned) +
              " witnesses replay (" + std::to_string(translated) +
              " reduction-level)"};
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "friendship matrix", 1, friendship_matrix},
      {2, "sealed-gadget rigidity", 10, sealed_rigidity},
      {3, "edge-gadget direction semantics", 60, edge_direction},
      {4, "red/blue gadget isomorphism", 60, red_blue},
      {5, "OR gadget at most two outward", 600, or_gadget},
      {6, "AND gadget exclusivity and modes", 600, and_gadget},
      {7, "NCL oracle on the triple-edge pair", 1, ncl_oracle},
      {8, "end-to-end equivalence", 1800, end_to_end},
      {9, "structure of reduce outputs", 60, output_structure},
      {10, "solver cross-validation", 300, solver_cross_validation},
      {11, "witness integrity", 600, witness_integrity},
  };
  std::set<int> chosen;
  for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));

  bool failed = false;
  for (const Criterion& c : all) {
    if (!chosen.empty() && !chosen.contains(c.id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.pass && in_budget;
    failed = failed || !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_s);
    std::cout << "criterion " << c.id << " [" << c.title
              << "]: " << (pass ? "PASS" : "FAIL") << " - " << o.detail << " ("
              << timing << (in_budget ? "" : ", over budget") << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
