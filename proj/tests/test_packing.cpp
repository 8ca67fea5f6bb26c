#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "tpack/packing.hpp"
#include "tpack/toolkit.hpp"

using namespace tpack;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInvariant;
}

}  // namespace

TEST_CASE("peeling a two-terminal graft leaves cycles covering the sink") {
  Graft g12 = fixtures::edge_and_two_cycle();
  auto [linkage, cycles] = linkage_with_cycle_cover(g12, 0, 1);
  REQUIRE(linkage.size() == 1);
  CHECK(linkage.paths[0].edges() == std::vector<EdgeId>{0});
  REQUIRE(cycles.size() == 1);
  CHECK(EdgeSet(cycles[0].edges.begin(), cycles[0].edges.end()) == EdgeSet{1, 2});

  Graft g4 = fixtures::two_edge_path();
  auto [linkage4, cycles4] = linkage_with_cycle_cover(g4, 0, 1);
  REQUIRE(linkage4.size() == 1);
  CHECK(linkage4.paths[0].edges() == std::vector<EdgeId>{0, 1});
  CHECK(cycles4.empty());
}

TEST_CASE("peeling needs a linked source") {
  Graft g10 = fixtures::four_two_star();
  CHECK(kind_of([&] { linkage_with_cycle_cover(g10, 0, 1); }) == ErrorKind::SourceNotLinked);
  CHECK(kind_of([&] { linkage_with_cycle_cover(fixtures::triangle(), 0, 1); }) ==
        ErrorKind::NotATerminal);
}

TEST_CASE("peeled output is always a linkage plus a cycle cover") {
  int found = 0;
  for (uint64_t seed = 1; found < 40; ++seed) {
    Graft g = generate_inner_eulerian({seed, static_cast<int>(4 + seed % 5), 2, 1, 2, 3});
    if (!is_linked(g, 0).linked) continue;
    ++found;
    auto [linkage, cycles] = linkage_with_cycle_cover(g, 0, 1);
    // linkage covers delta(s) with paths ending at t
    EdgeSet firsts;
    for (const Path& p : linkage.paths) {
      CHECK(p.first() == 0);
      CHECK(p.last() == 1);
      firsts.insert(p.edges().front());
    }
    CHECK(firsts == g.boundary({0}));
    // cycles live in the rest and cover the remaining boundary of t
    Graft rest = g.without(linkage.edge_union());
    EdgeSet cycle_edges;
    for (const auto& c : cycles) {
      CHECK(c.kind == PartitionPiece::Kind::cycle);
      for (EdgeId e : c.edges) CHECK(cycle_edges.insert(e).second);
    }
    for (EdgeId e : cycle_edges) CHECK(rest.has_edge(e));
    for (EdgeId e : rest.boundary({1})) CHECK(cycle_edges.count(e) == 1);
  }
}

TEST_CASE("peeling splices a colliding piece over to the source") {
  Graft g = fixtures::colliding_peel();
  REQUIRE(is_inner_eulerian(g));
  REQUIRE(is_linked(g, 0).linked);
  auto [linkage, cycles] = linkage_with_cycle_cover(g, 0, 1);
  REQUIRE(linkage.size() == 1);
  // edge 0 sits at t, off the linkage; its piece shares edge 2 with the
  // linkage path, so the peel walks the piece from t and splices at x
  CHECK(linkage.paths[0].edges() == std::vector<EdgeId>{3, 1, 0});
  REQUIRE(cycles.size() == 1);
  CHECK(EdgeSet(cycles[0].edges.begin(), cycles[0].edges.end()) == EdgeSet{2, 4});
  EdgeSet all = set_union(linkage.edge_union(),
                          EdgeSet(cycles[0].edges.begin(), cycles[0].edges.end()));
  CHECK(all == g.edge_ids());
}

TEST_CASE("deletion robustness reports per-terminal linkedness") {
  Graft g2 = fixtures::doubled_star();  // every boundary already the unique minimum cut
  for (EdgeId f : g2.edge_ids())
    for (EdgeId h : g2.edge_ids()) {
      auto report = linked_after_deletions(g2, f, h);
      for (const auto& [t, ok] : report) CHECK(ok);
    }

  Graft g6 = fixtures::doubled_two_path();
  auto report = linked_after_deletions(g6, 2, 3);
  CHECK_FALSE(report.at(0));

  Graft g1 = fixtures::triangle();
  auto single = linked_after_deletions(g1, 0, 0);
  Graft minus = g1.without({0});
  for (const auto& [t, ok] : single) CHECK(ok == is_linked(minus, t).linked);
}

TEST_CASE("extraction returns the terminal edge itself when both ends are terminals") {
  Graft g1 = fixtures::triangle();
  Path p = extract_tpath(g1, 0);
  CHECK(p.edges() == std::vector<EdgeId>{0});
}

TEST_CASE("extraction splits off through the inner vertex") {
  Graft g4 = fixtures::two_edge_path();
  Path p = extract_tpath(g4, 0);
  CHECK(p.edges() == std::vector<EdgeId>{0, 1});
}

TEST_CASE("extraction keeps the rest linkable and even") {
  Graft g2 = fixtures::doubled_star();
  Path p = extract_tpath(g2, 0);
  CHECK(p.contains_edge(0));
  CHECK(is_tpath(g2, p));
  Graft rest = g2.without(p.edge_set());
  CHECK(is_inner_eulerian(rest));
  CHECK(linkability_condition(rest));
}

TEST_CASE("extraction recurses through a chain of split-offs") {
  Graft g = fixtures::doubled_chain_star();
  REQUIRE(is_inner_eulerian(g));
  REQUIRE(linkability_condition(g));
  Path p = extract_tpath(g, 0);
  CHECK(p.contains_edge(0));
  CHECK(is_tpath(g, p));
  CHECK(p.length() == 4);  // a-p1-p2-v-(b or c)
  Graft rest = g.without(p.edge_set());
  CHECK(is_inner_eulerian(rest));
  CHECK(linkability_condition(rest));
  CHECK(extract_tpath(g, 0) == p);  // deterministic

  PathSystem packed = perfect_linkage(g);
  CHECK(packed.size() == 3);
  CHECK(2 * packed.size() == minimax_value(g).twice);
  CHECK(packed.size() == brute_force_max_packing(g).first);
}

TEST_CASE("extraction validates its preconditions") {
  CHECK(kind_of([] { extract_tpath(fixtures::odd_star(), 0); }) == ErrorKind::NotInnerEulerian);
  CHECK(kind_of([] { extract_tpath(fixtures::four_two_star(), 0); }) ==
        ErrorKind::LinkabilityFails);
  Graft g7 = fixtures::bridge_and_triangle();
  CHECK(kind_of([&] { extract_tpath(g7, 1); }) == ErrorKind::NotATerminalEdge);
}

TEST_CASE("the driver covers every terminal edge") {
  Graft g1 = fixtures::triangle();
  PathSystem sys = perfect_linkage(g1);
  REQUIRE(sys.size() == 3);
  CHECK(sys.paths[0].edges() == std::vector<EdgeId>{0});
  CHECK(sys.paths[1].edges() == std::vector<EdgeId>{1});
  CHECK(sys.paths[2].edges() == std::vector<EdgeId>{2});

  Graft g2 = fixtures::doubled_star();
  PathSystem sys2 = perfect_linkage(g2);
  CHECK(sys2.size() == 3);
  CHECK(sys2.edge_union() == g2.edge_ids());

  Graft edgeless = Graft::build(4, {0, 1, 2}, {});
  CHECK(perfect_linkage(edgeless).size() == 0);
}

TEST_CASE("certificates carry one orthogonal cut per terminal") {
  Graft g1 = fixtures::triangle();
  Certificate cert = packing_certificate(g1);
  CHECK(cert.paths.size() == 3);
  CHECK(cert.cuts.at(0).edges == EdgeSet{0, 2});
  CHECK(cert.cuts.at(1).edges == EdgeSet{0, 1});
  CHECK(cert.cuts.at(2).edges == EdgeSet{1, 2});
  CHECK(verify_certificate(g1, cert).ok);

  // the largest-cut side of terminal 0 is {0, 2}, so its cut is the far edge
  Graft g4 = fixtures::two_edge_path();
  Certificate cert4 = packing_certificate(g4);
  REQUIRE(cert4.paths.size() == 1);
  CHECK(cert4.paths.paths[0].edge_set() == EdgeSet{0, 1});
  CHECK(cert4.cuts.at(0).edges == EdgeSet{1});
  CHECK(cert4.cuts.at(0).source_region == VertexSet{0, 2});
  CHECK(cert4.cuts.at(1).edges == EdgeSet{1});
  CHECK(verify_certificate(g4, cert4).ok);
}

TEST_CASE("certificates exist without the linkability condition") {
  Graft g10 = fixtures::four_two_star();  // terminal a is not linked
  Certificate cert = packing_certificate(g10);
  REQUIRE(cert.paths.size() == 2);
  for (const Path& p : cert.paths.paths) CHECK(p.length() == 2);
  CHECK(cert.cuts.at(0).edges == EdgeSet{4, 5});
  CHECK(cert.cuts.at(1).edges == EdgeSet{4, 5});
  CHECK(verify_certificate(g10, cert).ok);
  CHECK(kind_of([&] { packing_certificate(fixtures::odd_star()); }) ==
        ErrorKind::NotInnerEulerian);
}

TEST_CASE("packing size equals the minimax value on linkable instances") {
  Graft g1 = fixtures::triangle();
  CHECK(static_cast<long long>(perfect_linkage(g1).size()) * 2 == minimax_value(g1).twice);
  Graft g2 = fixtures::doubled_star();
  CHECK(static_cast<long long>(perfect_linkage(g2).size()) * 2 == minimax_value(g2).twice);
}
