#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stablegraph/canonical.hpp"
#include "stablegraph/enumeration.hpp"
#include "stablegraph/error.hpp"
#include "stablegraph/moves.hpp"
#include "stablegraph/symmetry.hpp"

using namespace stablegraph;

namespace {

WeightedGraph square_with_doubled_sides() {
  return WeightedGraph::from_edges({0, 0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}});
}

int find_ord(const std::vector<BoundaryPoint>& pts, const WeightedGraph& g) {
  const auto key = canonical_key(g);
  for (const auto& p : pts) {
    if (p.key == key) return p.ord;
  }
  return 0;
}

}  // namespace

TEST_CASE("shrink") {
  const auto theta = shrink(named::theta(), 0);
  CHECK(are_isomorphic(theta, named::two_loop_vertex()));

  const auto dumbbell = shrink(named::dumbbell(), 0);
  CHECK(are_isomorphic(dumbbell, named::weight_one_tail()));

  for (int e = 0; e < 6; ++e) CHECK(are_isomorphic(shrink(named::k4(), e), named::contracted_k4()));

  // Agrees with contraction on the multiplicity matrix.
  for (const auto& g : {named::theta(), named::dumbbell(), named::k4(), named::contracted_k4()}) {
    for (int e = 0; e < g.edge_count(); ++e) CHECK(oracle::isomorphic(shrink(g, e), oracle::contract(g, e)));
  }
  CHECK_THROWS_AS(shrink(named::theta(), 3), PreconditionError);
}

TEST_CASE("shrink keeps edge order and the smaller vertex index") {
  const auto g = WeightedGraph::from_edges({0, 1, 0}, {{0, 2}, {0, 1}, {1, 2}, {2, 2}});
  const auto h = shrink(g, 1);
  CHECK(h.vertex_count() == 2);
  CHECK(h.weight(0) == 1);
  CHECK(h.edge_list() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 1}, {1, 1}});
  const auto l = shrink(g, 3);
  CHECK(l.weight(2) == 1);
  CHECK(l.edge_count() == 3);
}

TEST_CASE("pops at a degree-4 vertex") {
  const auto tlv = named::two_loop_vertex();
  const auto pops = pops_deg4(tlv, 0);
  REQUIRE(pops.size() == 3);
  int dumbbells = 0;
  int thetas = 0;
  for (const auto& [p, g] : pops) {
    dumbbells += are_isomorphic(g, named::dumbbell()) ? 1 : 0;
    thetas += are_isomorphic(g, named::theta()) ? 1 : 0;
    CHECK(weighted_genus(g) == 2);
    CHECK(is_stable(g).stable);
  }
  CHECK(dumbbells == 1);
  CHECK(thetas == 2);
  // Halves 0,1 form the first loop, so P12_34 keeps both loops.
  CHECK(are_isomorphic(pop_deg4(tlv, 0, Pairing::P12_34), named::dumbbell()));

  const auto ck4 = named::contracted_k4();
  int k4s = 0;
  int squares = 0;
  for (const auto& [p, g] : pops_deg4(ck4, *degree_four_vertex(ck4))) {
    k4s += are_isomorphic(g, named::k4()) ? 1 : 0;
    squares += are_isomorphic(g, square_with_doubled_sides()) ? 1 : 0;
  }
  CHECK(k4s == 2);
  CHECK(squares == 1);

  CHECK_THROWS_AS(pops_deg4(named::theta(), 0), PreconditionError);
  CHECK_THROWS_AS(pop_deg4(tlv, 2, Pairing::P13_24), PreconditionError);
}

TEST_CASE("pop layout") {
  const auto g = pop_deg4(named::two_loop_vertex(), 0, Pairing::P13_24);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.endpoints(2) == std::pair<VertexId, VertexId>{0, 1});
  CHECK(pairing_slots(Pairing::P12_34) == std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}});
  CHECK(pairing_slots(Pairing::P14_23) == std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}});
}

TEST_CASE("weight-one pop") {
  const auto g = pop_weight1(named::weight_one_tail(), 0);
  CHECK(are_isomorphic(g, named::dumbbell()));
  CHECK(g.is_loop(g.edge_count() - 1));
  CHECK(g.weight(0) == 0);
  CHECK(are_isomorphic(shrink(g, g.edge_count() - 1), named::weight_one_tail()));
  CHECK_THROWS_AS(pop_weight1(named::weight_one_tail(), 1), PreconditionError);

  // Genus 3: a weight-one leaf on a theta-like core.
  const auto leaf = WeightedGraph::from_edges({0, 0, 0, 1}, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}});
  REQUIRE(dimension(leaf) == 1);
  const auto popped = pop_weight1(leaf, 3);
  CHECK(dimension(popped) == 0);
  CHECK(weighted_genus(popped) == 3);
  CHECK(are_isomorphic(shrink(popped, popped.edge_count() - 1), leaf));
}

TEST_CASE("apply dispatches on kind") {
  MoveStep s;
  s.kind = MoveKind::PopDeg4;
  s.vertex = 0;
  s.pairing = Pairing::P12_34;
  CHECK(apply(named::two_loop_vertex(), s) == pop_deg4(named::two_loop_vertex(), 0, Pairing::P12_34));
  s.kind = MoveKind::Shrink;
  s.edge = 1;
  CHECK(apply(named::theta(), s) == shrink(named::theta(), 1));
  CHECK(to_string(s) == "shrink e2");
  s.kind = MoveKind::PopDeg4;
  s.vertex = 2;
  s.pairing = Pairing::P14_23;
  CHECK(to_string(s) == "pop v3 p3");
  s.kind = MoveKind::PopWeight1;
  CHECK(to_string(s) == "pop1 v3");
}

TEST_CASE("boundary graphs and ord") {
  const auto tlv = boundary_graphs(named::two_loop_vertex());
  CHECK(tlv.size() == 2);
  CHECK(find_ord(tlv, named::dumbbell()) == 1);
  CHECK(find_ord(tlv, named::theta()) == 3);

  const auto ck4 = boundary_graphs(named::contracted_k4());
  CHECK(ck4.size() == 2);
  CHECK(find_ord(ck4, named::k4()) == 6);
  CHECK(find_ord(ck4, square_with_doubled_sides()) == 2);

  const auto tail = boundary_graphs(named::weight_one_tail());
  REQUIRE(tail.size() == 1);
  CHECK(find_ord(tail, named::dumbbell()) == 2);

  CHECK(std::is_sorted(ck4.begin(), ck4.end(),
                       [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.key < b.key; }));
  CHECK_THROWS_AS(boundary_graphs(named::theta()), PreconditionError);
}

TEST_CASE("ord matches a count over all edges") {
  for (const auto& g : enumerate_stratum_classes(3, 1)) {
    for (const auto& bp : boundary_graphs(g.graph)) {
      const auto gx = graph_from_key(bp.key);
      int count = 0;
      for (int e = 0; e < gx.edge_count(); ++e) count += oracle::isomorphic(oracle::contract(gx, e), g.graph);
      CHECK(count == bp.ord);
      CHECK(static_cast<int>(shrinkable_edges(gx, g.graph).size()) == bp.ord);
    }
  }
}

TEST_CASE("transitivity") {
  CHECK(transitivity_check(named::two_loop_vertex(), named::theta()));
  CHECK(transitivity_check(named::contracted_k4(), named::k4()));
  CHECK(transitivity_check(named::weight_one_tail(), named::dumbbell()));
  CHECK_THROWS_AS(transitivity_check(named::contracted_k4(), named::theta()), PreconditionError);
}

TEST_CASE("smooth points") {
  CHECK(is_smooth_point(1));
  CHECK_FALSE(is_smooth_point(6));
  CHECK_FALSE(is_smooth_point(2));
  CHECK_THROWS_AS(is_smooth_point(0), PreconditionError);
}

TEST_CASE("stratum adjacency") {
  const auto g2 = one_stratum_adjacency(2);
  CHECK(g2.nodes.size() == 2);
  CHECK(g2.edges.size() >= 1);
  CHECK(g2.connected);
  const auto g3 = one_stratum_adjacency(3);
  CHECK(g3.nodes.size() == 5);
  CHECK(g3.connected);
  CHECK(one_stratum_adjacency(4).connected);
  CHECK_THROWS_AS(one_stratum_adjacency(1), PreconditionError);
}

TEST_CASE("caterpillar") {
  CHECK(are_isomorphic(caterpillar(2), named::dumbbell()));
  const auto star = caterpillar(3);
  CHECK(star.vertex_count() == 4);
  CHECK(loop_count(star) == 3);
  for (int g = 2; g <= 6; ++g) {
    const auto c = caterpillar(g);
    CHECK(weighted_genus(c) == g);
    CHECK(dimension(c) == 0);
    CHECK(c.edge_count() == 3 * g - 3);
    CHECK(c.vertex_count() == 2 * g - 2);
    CHECK(loop_count(c) == g);
  }
  const auto g4 = caterpillar(4);
  int centers = 0;
  for (int v = 0; v < g4.vertex_count(); ++v) {
    bool loop = false;
    for (int e = 0; e < g4.edge_count(); ++e) loop |= g4.is_loop(e) && g4.endpoints(e).first == v;
    centers += loop ? 0 : 1;
  }
  CHECK(centers == 2);
  CHECK_THROWS_AS(caterpillar(1), PreconditionError);
}

TEST_CASE("normal form reduction") {
  const auto theta = normal_form_reduce(named::theta());
  CHECK(theta.steps.size() == 2);
  CHECK(are_isomorphic(theta.end(), named::dumbbell()));
  CHECK_FALSE(verify_sequence(theta));

  for (int g = 2; g <= 5; ++g) CHECK(normal_form_reduce(caterpillar(g)).steps.empty());

  const auto k4 = normal_form_reduce(named::k4());
  CHECK(are_isomorphic(k4.end(), caterpillar(3)));
  CHECK_FALSE(verify_sequence(k4));
  CHECK(k4.steps.size() % 2 == 0);
  for (std::size_t i = 0; i < k4.steps.size(); ++i) {
    CHECK((k4.steps[i].kind == MoveKind::Shrink) == (i % 2 == 0));
    if (i + 1 < k4.steps.size()) CHECK(k4.steps[i].target == k4.steps[i + 1].source);
  }
  CHECK_THROWS_AS(normal_form_reduce(named::two_loop_vertex()), PreconditionError);
}

TEST_CASE("sequence verification catches tampering") {
  auto seq = normal_form_reduce(named::k4());
  REQUIRE(!seq.steps.empty());
  auto bad = seq;
  bad.steps[0].edge = (bad.steps[0].edge + 1) % bad.graphs[0].edge_count();
  bad.steps[0].target = CanonicalKey("0|");
  CHECK(verify_sequence(bad));
  auto short_seq = seq;
  short_seq.graphs.pop_back();
  CHECK(verify_sequence(short_seq));
}

TEST_CASE("BFS reachability") {
  const auto path = bfs_reachable(named::theta(), named::dumbbell());
  REQUIRE(path);
  CHECK(path->steps.size() == 2);
  CHECK_FALSE(verify_sequence(*path));

  const auto self = bfs_reachable(named::k4(), named::k4());
  REQUIRE(self);
  CHECK(self->steps.empty());

  const auto zero = enumerate_stratum_classes(3, 0);
  for (const auto& a : zero) {
    for (const auto& b : zero) {
      const auto p = bfs_reachable(a.graph, b.graph);
      REQUIRE(p);
      CHECK(are_isomorphic(p->end(), b.graph));
      CHECK_FALSE(verify_sequence(*p));
    }
  }
  CHECK_THROWS_AS(bfs_reachable(named::theta(), named::k4()), PreconditionError);
}

TEST_CASE("sequence text") {
  const auto seq = normal_form_reduce(named::theta());
  const auto plain = format_sequence(seq, false);
  CHECK(plain.rfind("shrink e", 0) == 0);
  CHECK(plain.find("\npop v") != std::string::npos);
  CHECK(plain.find("wsg 1") == std::string::npos);
  CHECK(format_sequence(seq, true).find("wsg 1") != std::string::npos);
}
