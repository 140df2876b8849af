#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "stablegraph/error.hpp"
#include "stablegraph/symmetry.hpp"

using namespace stablegraph;

namespace {

std::set<Permutation> as_set(const std::vector<std::vector<int>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(named::theta()).order() == 12);
  CHECK(automorphism_group(named::dumbbell()).order() == 8);
  CHECK(automorphism_group(named::k4()).order() == 24);
  CHECK(automorphism_group(named::contracted_k4()).order() == 8);
  CHECK(automorphism_group(named::two_loop_vertex()).order() == 8);
  CHECK(automorphism_group(named::weight_one_tail()).order() == 2);
  CHECK(automorphism_group(WeightedGraph::from_edges({2}, {})).order() == 1);
}

TEST_CASE("automorphism groups match exhaustive search") {
  for (const auto& g : {named::theta(), named::dumbbell(), named::k4(), named::contracted_k4(),
                        named::two_loop_vertex(), named::weight_one_tail()}) {
    const auto group = automorphism_group(g);
    CHECK(as_set(group.elements()) == as_set(oracle::automorphisms(g)));
  }
}

TEST_CASE("automorphisms commute with the pairing") {
  const auto g = named::contracted_k4();
  const auto group = automorphism_group(g);
  for (const auto& a : group.elements()) {
    for (int h = 0; h < g.half_edge_count(); ++h) {
      CHECK(a[WeightedGraph::opposite(h)] == WeightedGraph::opposite(a[h]));
    }
    const auto vm = induced_vertex_map(g, a);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.weight(vm[v]) == g.weight(v));
    const auto em = induced_edge_map(g, a);
    CHECK(static_cast<int>(em.size()) == g.edge_count());
  }
}

TEST_CASE("vertex automorphisms") {
  CHECK(vertex_automorphisms(named::k4()).size() == 24);
  CHECK(vertex_automorphisms(named::weight_one_tail()).size() == 1);
  CHECK(vertex_automorphisms(named::theta()).size() == 2);
}

TEST_CASE("loop count") {
  CHECK(loop_count(named::theta()) == 0);
  CHECK(loop_count(named::dumbbell()) == 2);
  CHECK(loop_count(named::two_loop_vertex()) == 2);
}

TEST_CASE("klein four group") {
  const auto v4 = klein_four();
  CHECK(v4.order() == 4);
  CHECK(v4.contains({1, 0, 3, 2}));
  CHECK(v4.contains({2, 3, 0, 1}));
  CHECK(v4.contains({3, 2, 1, 0}));
}

TEST_CASE("sigma image and kernel") {
  const auto tlv = named::two_loop_vertex();
  CHECK(degree_four_vertex(tlv) == 0);
  CHECK(sigma_image(tlv, 0).order() == 8);
  CHECK(kernel_v4_order(tlv, 0) == 4);
  CHECK(r_group(tlv, 0) == S3Type::C2);

  const auto ck4 = named::contracted_k4();
  const auto v0 = degree_four_vertex(ck4);
  REQUIRE(v0);
  CHECK(sigma_image(ck4, *v0).order() == 8);
  CHECK(kernel_v4_order(ck4, *v0) == 4);
  CHECK(r_group(ck4, *v0) == S3Type::C2);

  for (const auto& g : {tlv, ck4}) {
    const auto d = oracle::sigma_data(g);
    const auto v = *degree_four_vertex(g);
    CHECK(d.image_order == static_cast<int>(sigma_image(g, v).order()));
    CHECK(d.kernel_order == kernel_v4_order(g, v));
  }
}

TEST_CASE("residual group of a genus-5 graph with trivial R") {
  const auto g = WeightedGraph::from_edges(
      {0, 0, 0, 0, 0, 0, 0},
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 6}, {5, 6}});
  const auto v0 = degree_four_vertex(g);
  REQUIRE(v0);
  const auto aut = automorphism_group(g);
  CHECK(aut.order() == static_cast<std::size_t>(oracle::sigma_data(g).aut_order));
  CHECK(kernel_v4_order(g, *v0) * s3_order(r_group(g, *v0)) == static_cast<int>(aut.order()));
  CHECK(r_group(g, *v0) == S3Type::Trivial);
  CHECK(oracle::sigma_data(g).kernel_order == kernel_v4_order(g, *v0));
}

TEST_CASE("sigma preconditions") {
  CHECK_FALSE(degree_four_vertex(named::theta()));
  CHECK_THROWS_AS(sigma_image(named::theta(), 0), PreconditionError);
  CHECK_THROWS_AS(kernel_v4_order(named::weight_one_tail(), 0), PreconditionError);
  CHECK_THROWS_AS(r_group(named::two_loop_vertex(), 3), PreconditionError);
}

TEST_CASE("S3 type helpers") {
  CHECK(s3_type_from_order(1) == S3Type::Trivial);
  CHECK(s3_type_from_order(2) == S3Type::C2);
  CHECK(s3_type_from_order(3) == S3Type::C3);
  CHECK(s3_type_from_order(6) == S3Type::Full);
  CHECK_THROWS_AS(s3_type_from_order(4), InternalError);
  for (auto t : {S3Type::Trivial, S3Type::C2, S3Type::C3, S3Type::Full}) {
    CHECK(s3_type_from_string(to_string(t)) == t);
  }
  CHECK_FALSE(s3_type_from_string("d8"));
}

TEST_CASE("orbits of Aut(theta) on edges") {
  const auto g = named::theta();
  std::vector<Permutation> action;
  const auto group = automorphism_group(g);
  for (const auto& a : group.generators()) action.push_back(induced_edge_map(g, a));
  CHECK(orbits(g.edge_count(), action).size() == 1);
}
