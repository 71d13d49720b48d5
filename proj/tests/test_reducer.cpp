#include <algorithm>

#include "doctest.h"

#include "fas/errors.hpp"
#include "fas/reducer.hpp"

using namespace fas;
using namespace fas::ncl;
namespace R = fas::reduction;

namespace {

NclGraph triple_or() {
  return NclGraph({VertexKind::Or, VertexKind::Or}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

NclGraph and_or_mix() {
  return NclGraph({VertexKind::And, VertexKind::And, VertexKind::Or, VertexKind::Or},
                  {{0, 1, 1}, {0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {2, 3, 2}});
}

Orientation bits(std::initializer_list<int> b) {
  std::vector<bool> v;
  for (int x : b) v.push_back(x != 0);
  return Orientation(v);
}

}  // namespace

TEST_SUITE("reducer") {

TEST_CASE("triple-edge OR pair compiles to 64 locations") {
  // Two OR gadgets of 5 plus three edge gadgets of 18.
  const auto art = R::reduce(triple_or(), bits({0, 0, 1}), bits({1, 1, 0}));
  CHECK(art.fas.order() == 64);
  CHECK(max_degree(art.fas.locations()) == 3);
  CHECK(is_planar_small(art.fas.locations()));
  CHECK(art.planar_input == true);
  CHECK(R::config_to_orientation(art, art.sigma) == bits({0, 0, 1}));
  CHECK(R::config_to_orientation(art, art.sigma_prime) == bits({1, 1, 0}));
  CHECK(verify_color_classing(art.fas, art.classing));
}

TEST_CASE("gadget parts partition the locations") {
  const auto art = R::reduce(and_or_mix(), bits({0, 0, 0, 0, 0, 1}),
                             bits({0, 0, 0, 0, 0, 1}));
  std::vector<int> owner(art.fas.order(), 0);
  for (const auto& ref : art.edge_map) {
    for (VertexId v : art.locations_of(art.assembly.part(ref.part))) ++owner[v];
  }
  for (const auto& ref : art.vertex_map) {
    for (VertexId v : art.locations_of(art.assembly.part(ref.part))) ++owner[v];
  }
  CHECK(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));
  // Interior degrees match the blueprint; each port gains exactly one edge.
  for (const auto& part : art.assembly.parts()) {
    const auto& bp = gadgets::blueprint(part.kind);
    for (VertexId i = 0; i < part.size; ++i) {
      const bool is_port = std::any_of(bp.ports.begin(), bp.ports.end(),
                                       [&](const gadgets::Port& p) { return p.location == i; });
      CHECK(art.fas.locations().degree(part.global(i)) ==
            bp.locations.degree(i) + (is_port ? 1 : 0));
    }
  }
}

TEST_CASE("AND slots: the blue edge takes the blue port") {
  const auto art = R::reduce(and_or_mix(), bits({0, 0, 0, 0, 0, 1}),
                             bits({0, 0, 0, 0, 0, 1}));
  const auto& v0 = art.vertex_map[0];
  CHECK(v0.kind == gadgets::GadgetKind::AndVertex);
  CHECK(v0.port_edges == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(art.edge_map[0].kind == gadgets::GadgetKind::RedEdge);
  CHECK(art.edge_map[2].kind == gadgets::GadgetKind::BlueEdge);
}

TEST_CASE("every valid orientation has a placement with the same populations") {
  const NclGraph g = and_or_mix();
  const auto valid = enumerate_valid(g, true);
  const auto art = R::reduce(g, valid.list[0], valid.list[0]);
  for (const auto& o : valid.list) {
    const Configuration c = R::orientation_to_config(art, o);
    CHECK(R::config_to_orientation(art, c) == o);
  }
}

TEST_CASE("invalid orientations are rejected") {
  CHECK_THROWS_AS(R::reduce(triple_or(), bits({0, 0, 0}), bits({1, 1, 0})), InputError);
  CHECK_THROWS_AS(R::reduce(triple_or(), bits({0, 0, 1}), bits({1, 1, 1})), InputError);
}

TEST_CASE("witness translation") {
  const NclGraph g = triple_or();
  const auto art = R::reduce(g, bits({0, 0, 1}), bits({1, 1, 0}));
  CHECK(R::translate_witness(art, {}).empty());

  const std::vector<FlipMove> one{{0}};
  const auto swaps = R::translate_witness(art, one);
  const Configuration end = replay(art.fas, art.sigma, swaps);
  CHECK(art.classing.pattern(end) ==
        art.classing.pattern(R::orientation_to_config(art, bits({1, 0, 1}))));

  const auto r = solve_c2c(g, bits({0, 0, 1}), bits({1, 1, 0}));
  REQUIRE(r.witness);
  const auto full = R::translate_witness(art, *r.witness);
  CHECK(art.classing.pattern(replay(art.fas, art.sigma, full)) ==
        art.classing.pattern(art.sigma_prime));

  const std::vector<FlipMove> illegal{{2}};
  CHECK_THROWS_AS(R::translate_witness(art, illegal), InputError);
}

}
