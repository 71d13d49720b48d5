#include <random>

#include "doctest.h"

#include "fas/errors.hpp"
#include "fas/json_io.hpp"
#include "fas/verifier.hpp"

using namespace fas;
using namespace fas::ncl;
namespace V = fas::verify;

namespace {

NclGraph triple_or() {
  return NclGraph({VertexKind::Or, VertexKind::Or}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

NclGraph triple_and() {
  return NclGraph({VertexKind::And, VertexKind::And}, {{0, 1, 2}, {0, 1, 1}, {0, 1, 1}});
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("brute force on tiny instances") {
  const FasInstance k2(SimpleGraph::path(2), SimpleGraph::path(2));
  const auto s = V::brute_force_fs(k2, Configuration::identity(2));
  CHECK(s == V::StateSet{{0, 1}, {1, 0}});

  const FasInstance p3(SimpleGraph::path(3), SimpleGraph::path(3));
  CHECK(V::brute_force_fs(p3, Configuration::identity(3)).size() == 3);
  CHECK_THROWS_AS(V::brute_force_fs(p3, Configuration::identity(3), {}, 2),
                  ResourceLimitError);
}

TEST_CASE("brute force: sealed edge gadget is a single quotient state") {
  const auto& bp = gadgets::blueprint(gadgets::GadgetKind::BlueEdge);
  const std::array sc{gadgets::PortScenario::sealed(), gadgets::PortScenario::sealed()};
  const auto h = gadgets::harness(bp, sc);
  CHECK(V::brute_force_fs(h.colored.instance, h.colored.start, h.colored.classing).size() ==
        1);
}

TEST_CASE("brute force agrees with the engine's component size") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<Edge> xe, ye;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng() % 2) xe.push_back({u, v});
        if (rng() % 3) ye.push_back({u, v});
      }
    }
    const FasInstance inst(SimpleGraph(n, xe), SimpleGraph(n, ye));
    const auto rep =
        enumerate_component(inst, Configuration::identity(n), SearchOptions{}, 100000);
    CHECK(rep.size == V::brute_force_fs(inst, Configuration::identity(n)).size());
  }
}

TEST_CASE("edge gadget suite passes") {
  const auto r = V::gadget_suite(gadgets::GadgetKind::BlueEdge);
  for (const auto& p : r.properties) CHECK_MESSAGE(p.passed, p.name, ": ", p.detail);
}

TEST_CASE("vertex gadget behavior") {
  for (const auto& p : V::or_properties()) CHECK_MESSAGE(p.passed, p.name, ": ", p.detail);
  for (const auto& p : V::and_properties()) CHECK_MESSAGE(p.passed, p.name, ": ", p.detail);
}

TEST_CASE("exhaustive equivalence on the triple-edge OR pair") {
  const auto r = V::equivalence_test(triple_or(), V::PairSource::exhaustive());
  CHECK(r.pairs_tested == 36);
  CHECK(r.agreements == 36);
  CHECK(r.disagreements.empty());
  CHECK(r.skipped == 0);
  CHECK(r.witness_failures.empty());
  CHECK(r.witnesses_checked > 0);
  CHECK(r.passed());
}

TEST_CASE("unreachable pairs agree too") {
  // The two valid orientations of the AND pair are both frozen.
  const auto r = V::equivalence_test(triple_and(), V::PairSource::exhaustive());
  CHECK(r.pairs_tested == 4);
  CHECK(r.reachable_pairs == 2);
  CHECK(r.disagreements.empty());
  CHECK(r.fas_components == 2);
  CHECK(r.passed());
}

TEST_CASE("sampled mode is deterministic") {
  const auto a = V::equivalence_test(triple_or(), V::PairSource::sampled(10, 3));
  const auto b = V::equivalence_test(triple_or(), V::PairSource::sampled(10, 3));
  CHECK(io::dump(io::report_to_json(a)) == io::dump(io::report_to_json(b)));
  CHECK(a.pairs_tested <= 10);
}

TEST_CASE("caps mark pairs skipped, never agreed") {
  V::EquivalenceOptions o;
  o.fas_max_states = 10;
  o.min_completed_pairs = 1;
  const auto r = V::equivalence_test(triple_or(), V::PairSource::exhaustive(), o);
  CHECK(r.skipped > 0);
  CHECK(r.agreements + r.skipped + r.disagreements.size() == r.pairs_tested);
}

TEST_CASE("a lone AND vertex is not a closed constraint graph") {
  CHECK_THROWS_AS(NclGraph({VertexKind::And}, {}), InputError);
}

TEST_CASE("FAS witness projection catches an illegal swap") {
  const auto art = reduction::reduce(triple_or(), Orientation({false, false, true}),
                                     Orientation({false, false, true}));
  const std::vector<SwapMove> bogus{{0, 1}, {0, 1}, {0, 63}};
  CHECK(V::check_fas_witness_projection(art, art.sigma, bogus).has_value());
  CHECK_FALSE(V::check_fas_witness_projection(art, art.sigma, {}).has_value());
}

TEST_CASE("labeled reachability implies quotient reachability") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 3;
    std::vector<gadgets::Color> colors(n);
    for (auto& c : colors) c = gadgets::kAllColors[rng() % 3];
    std::vector<Edge> xe;
    for (VertexId v = 1; v < n; ++v) xe.push_back({static_cast<VertexId>(rng() % v), v});
    const auto ci = gadgets::colored_instance(SimpleGraph(n, xe), colors);
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(V::compare_labeled_quotient(ci.instance, ci.classing, ci.start, Configuration(p))
              .sound());
  }
}

TEST_CASE("quotient can see more than labeled search") {
  // Three blues, location 2 isolated: the pattern never changes, but person 2
  // can never leave location 2.
  const std::vector<gadgets::Color> blues(3, gadgets::Color::Blue);
  const auto ci = gadgets::colored_instance(SimpleGraph(3, {{0, 1}}), blues);
  const auto cmp = V::compare_labeled_quotient(ci.instance, ci.classing, ci.start,
                                               Configuration({2, 1, 0}));
  CHECK(cmp.labeled == SearchStatus::Unreachable);
  CHECK(cmp.quotient == SearchStatus::Reachable);
  CHECK(cmp.diverges());
}

TEST_CASE("config file matches built-in defaults") {
  V::PairSource s;
  const auto o = V::load_equivalence_options(FAS_CONFIG_DIR "/verify_defaults.json", &s);
  const V::EquivalenceOptions d;
  CHECK(o.fas_max_states == d.fas_max_states);
  CHECK(o.ncl_max_states == d.ncl_max_states);
  CHECK(o.translate_max_states_per_flip == d.translate_max_states_per_flip);
  CHECK(o.min_completed_pairs == d.min_completed_pairs);
  CHECK(s.count > 0);
  CHECK_THROWS_AS(V::load_equivalence_options("/nonexistent.json"), InputError);
}

}
