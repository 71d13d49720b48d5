#include <random>

#include "doctest.h"

#include "fas/errors.hpp"
#include "fas/fs_engine.hpp"
#include "oracles.hpp"

using namespace fas;

namespace {

SimpleGraph from_adj(const oracle::Adj& a) {
  std::vector<Edge> es;
  for (VertexId u = 0; u < a.size(); ++u) {
    for (VertexId v = u + 1; v < a.size(); ++v) {
      if (a[u][v]) es.push_back({u, v});
    }
  }
  return SimpleGraph(a.size(), es);
}

oracle::Adj random_adj(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  oracle::Adj a(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) a[u][v] = a[v][u] = coin(rng);
  }
  return a;
}

std::vector<unsigned> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Configuration config(const std::vector<unsigned>& p) {
  return Configuration(std::vector<VertexId>(p.begin(), p.end()));
}

}  // namespace

TEST_SUITE("fs_engine") {

TEST_CASE("FS(P3, P3) from the identity has three placements") {
  // Only persons 0-1 and 1-2 are friends; from 012 the moves give 102 and
  // 021, and neither of those admits a new swap.
  const FasInstance inst(SimpleGraph::path(3), SimpleGraph::path(3));
  const Exploration ex = explore(inst, Configuration::identity(3));
  CHECK(ex.complete());
  CHECK(ex.size() == 3);
  CHECK(ex.contains(Configuration({1, 0, 2})));
  CHECK(ex.contains(Configuration({0, 2, 1})));
  CHECK_FALSE(ex.contains(Configuration({2, 1, 0})));
}

TEST_CASE("K2 with K2 needs one swap; an edgeless Y needs the impossible") {
  const FasInstance k2(SimpleGraph::path(2), SimpleGraph::path(2));
  const auto r = solve_c2c(k2, Configuration::identity(2), Configuration({1, 0}));
  REQUIRE(r.status == SearchStatus::Reachable);
  CHECK(r.witness->size() == 1);

  const FasInstance lonely(SimpleGraph::path(2), SimpleGraph(2, std::span<const Edge>{}));
  CHECK(solve_c2c(lonely, Configuration::identity(2), Configuration({1, 0})).status ==
        SearchStatus::Unreachable);
}

TEST_CASE("identical endpoints give an empty witness") {
  const FasInstance inst(SimpleGraph::path(4), SimpleGraph::path(4));
  const auto r = solve_c2c(inst, Configuration::identity(4), Configuration::identity(4));
  REQUIRE(r.status == SearchStatus::Reachable);
  CHECK(r.witness->empty());
}

TEST_CASE("configurations must be permutations") {
  CHECK_THROWS_AS(Configuration({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Configuration({0, 3}), InputError);
  CHECK_THROWS_AS(FasInstance(SimpleGraph::path(2), SimpleGraph::path(3)), InputError);
}

TEST_CASE("checked moves reject non-friends and non-neighbors") {
  const FasInstance inst(SimpleGraph::path(3), SimpleGraph::path(3));
  const Configuration id = Configuration::identity(3);
  CHECK_THROWS_AS(apply_swap_checked(inst, id, {0, 2}), MoveError);
  const Configuration c = apply_swap_checked(inst, id, {0, 1});
  CHECK_THROWS_AS(apply_swap_checked(inst, c, {1, 2}), MoveError);
  const std::vector<SwapMove> bad{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(replay(inst, id, bad), MoveError);
  CHECK(legal_swaps(inst, id) == std::vector<SwapMove>{{0, 1}, {1, 2}});
}

TEST_CASE("state cap yields LIMIT, never a verdict") {
  const FasInstance inst(SimpleGraph::path(8), SimpleGraph::complete(8));
  SearchOptions o;
  o.max_states = 50;
  std::vector<VertexId> rev{7, 6, 5, 4, 3, 2, 1, 0};
  const auto r = solve_c2c(inst, Configuration::identity(8), Configuration(rev), o);
  CHECK(r.status == SearchStatus::Limit);
  CHECK_FALSE(r.witness.has_value());
  const auto rep = enumerate_component(inst, Configuration::identity(8), o, 1000);
  CHECK(rep.status == SearchStatus::Limit);
}

TEST_CASE("component of K_n on a path is all n! placements") {
  const FasInstance inst(SimpleGraph::path(5), SimpleGraph::complete(5));
  const auto rep =
      enumerate_component(inst, Configuration::identity(5), SearchOptions{}, 1000);
  CHECK(rep.status == SearchStatus::Reachable);
  CHECK(rep.size == 120);
}

TEST_CASE("color classing soundness check") {
  // Persons 0,1 form a clique and both befriend 2: sound.
  const FasInstance ok(SimpleGraph::path(3), SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(verify_color_classing(ok, ColorClassing({0, 0, 1}, 2)));
  // Persons 0,1 are not friends: unsound.
  const FasInstance bad(SimpleGraph::path(3), SimpleGraph(3, {{0, 2}, {1, 2}}));
  CHECK_FALSE(verify_color_classing(bad, ColorClassing({0, 0, 1}, 2)));
  // Only 0 befriends 2: unsound.
  const FasInstance lopsided(SimpleGraph::path(3), SimpleGraph(3, {{0, 1}, {0, 2}}));
  CHECK_FALSE(verify_color_classing(lopsided, ColorClassing({0, 0, 1}, 2)));
  CHECK_THROWS_AS(ColorClassing({0, 2}, 2), InputError);
}

TEST_CASE("person-to-location on a triangle of friends") {
  const FasInstance inst(SimpleGraph::path(3), SimpleGraph::complete(3));
  const auto r = solve_person_to_location(inst, Configuration::identity(3), 0, 2);
  REQUIRE(r.status == SearchStatus::Reachable);
  const Configuration end = replay(inst, Configuration::identity(3), *r.witness);
  CHECK(end.person_at(2) == 0);

  SearchOptions q = SearchOptions::quotient_by(ColorClassing({0, 0, 0}, 1));
  const auto rq = solve_person_to_location(inst, Configuration::identity(3), 0, 2, q);
  REQUIRE(rq.status == SearchStatus::Reachable);
  CHECK(replay(inst, Configuration::identity(3), *rq.witness).person_at(2) == 0);

  const FasInstance stuck(SimpleGraph::path(3), SimpleGraph(3, {{1, 2}}));
  CHECK(solve_person_to_location(stuck, Configuration::identity(3), 0, 2).status ==
        SearchStatus::Unreachable);
}

TEST_CASE("random small instances agree with the permutation oracle") {
  std::mt19937_64 rng(1234);
  int reachable = 0, unreachable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const oracle::Adj x = random_adj(n, 0.5, rng);
    const oracle::Adj y = random_adj(n, 0.6, rng);
    const auto comp = oracle::fs_components(x, y);
    const FasInstance inst(from_adj(x), from_adj(y));
    for (int k = 0; k < 4; ++k) {
      const auto a = random_perm(n, rng);
      const auto b = random_perm(n, rng);
      const bool expect = comp.at(a) == comp.at(b);
      for (bool bidir : {false, true}) {
        SearchOptions o;
        o.bidirectional = bidir;
        const auto r = solve_c2c(inst, config(a), config(b), o);
        CHECK(r.status == (expect ? SearchStatus::Reachable : SearchStatus::Unreachable));
        if (r.witness) CHECK(replay(inst, config(a), *r.witness) == config(b));
      }
      expect ? ++reachable : ++unreachable;
    }
  }
  CHECK(reachable > 20);
  CHECK(unreachable > 20);
}

TEST_CASE("quotient search equals pattern reachability on blown-up people graphs") {
  // People of one color are a clique and share friendships: the oracle answer
  // is "some placement in the labeled component has the target pattern".
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const std::uint32_t k = 2 + trial % 2;
    std::vector<std::uint32_t> cls(n);
    for (auto& c : cls) c = rng() % k;
    const oracle::Adj color_rel = random_adj(k, 0.5, rng);
    oracle::Adj y(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        y[a][b] = a != b && (cls[a] == cls[b] || color_rel[cls[a]][cls[b]]);
      }
    }
    const oracle::Adj x = random_adj(n, 0.6, rng);
    const auto comp = oracle::fs_components(x, y);
    const FasInstance inst(from_adj(x), from_adj(y));
    const ColorClassing cc(cls, k);
    REQUIRE(verify_color_classing(inst, cc));
    const auto a = random_perm(n, rng);
    const auto b = random_perm(n, rng);
    auto pattern = [&](const std::vector<unsigned>& p) {
      std::vector<std::uint32_t> out;
      for (unsigned person : p) out.push_back(cls[person]);
      return out;
    };
    bool expect = false;
    for (const auto& [p, c] : comp) {
      if (c == comp.at(a) && pattern(p) == pattern(b)) expect = true;
    }
    const auto r = solve_c2c(inst, config(a), config(b), SearchOptions::quotient_by(cc));
    CHECK(r.status == (expect ? SearchStatus::Reachable : SearchStatus::Unreachable));
    if (r.witness) {
      CHECK(cc.pattern(replay(inst, config(a), *r.witness)) == cc.pattern(config(b)));
    }
  }
}

}
