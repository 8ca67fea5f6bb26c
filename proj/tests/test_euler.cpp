#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tpack/euler.hpp"
#include "tpack/toolkit.hpp"

using namespace tpack;

TEST_CASE("inner-Eulerian predicate checks non-terminal degrees") {
  CHECK(is_inner_eulerian(fixtures::triangle()));
  CHECK(is_inner_eulerian(fixtures::doubled_star()));
  CHECK_FALSE(is_inner_eulerian(fixtures::odd_star()));
  CHECK(odd_inner_vertex(fixtures::odd_star()) == 3);
  CHECK_FALSE(is_inner_eulerian(fixtures::lopsided_star()));
}

TEST_CASE("partition splits a bridge plus triangle into its components") {
  Graft g7 = fixtures::bridge_and_triangle();
  auto pieces = cycle_tpath_partition(g7);
  REQUIRE(pieces.size() == 2);
  CHECK(valid_partition(g7, pieces));
  CHECK(pieces[0].kind == PartitionPiece::Kind::t_path);
  CHECK(pieces[0].edges == std::vector<EdgeId>{0});
  CHECK(pieces[1].kind == PartitionPiece::Kind::cycle);
  CHECK(EdgeSet(pieces[1].edges.begin(), pieces[1].edges.end()) == EdgeSet{1, 2, 3});
}

TEST_CASE("partition of the doubled star pairs the spokes into T-paths") {
  Graft g2 = fixtures::doubled_star();
  auto pieces = cycle_tpath_partition(g2);
  CHECK(valid_partition(g2, pieces));
  int tpaths = 0;
  for (const auto& p : pieces) tpaths += p.kind == PartitionPiece::Kind::t_path ? 1 : 0;
  CHECK(tpaths == 3);
}

TEST_CASE("partition requires the parity condition") {
  CHECK_THROWS_AS(cycle_tpath_partition(fixtures::odd_star()), Error);
}

TEST_CASE("cycles through a terminal are legal pieces when forced") {
  // two terminals, one 2-cycle hanging at a: no distinct-terminal pairing exists
  Graft g = Graft::build(3, {0, 1}, {{0, 2}, {2, 0}});
  auto pieces = cycle_tpath_partition(g);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].kind == PartitionPiece::Kind::cycle);
  CHECK(valid_partition(g, pieces));
}

TEST_CASE("partition validity and piece removal on generated instances") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 200; ++seed) {
    GenParams params{seed, static_cast<int>(4 + seed % 6), static_cast<int>(2 + seed % 3), 1, 2,
                     3};
    if (params.terminal_count > params.vertex_count) continue;
    Graft g = generate_inner_eulerian(params);
    auto pieces = cycle_tpath_partition(g);
    REQUIRE(valid_partition(g, pieces));
    for (const auto& piece : pieces) {
      Graft rest = g.without(EdgeSet(piece.edges.begin(), piece.edges.end()));
      CHECK(is_inner_eulerian(rest));
      ++checked;
    }
  }
}

TEST_CASE("odd witnesses are named") {
  Graft g = Graft::build(4, {0, 1}, {{0, 2}, {2, 1}, {2, 3}, {3, 2}});
  // vertex 2 has degree 4, vertex 3 degree 2: even; make one odd
  Graft bad = Graft::build(4, {0, 1}, {{0, 2}, {2, 1}, {2, 3}});
  CHECK(odd_inner_vertex(g) == std::nullopt);
  CHECK(odd_inner_vertex(bad) == 2);  // lowest odd inner vertex
}
