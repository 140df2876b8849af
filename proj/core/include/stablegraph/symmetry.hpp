#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablegraph/graph.hpp"
#include "stablegraph/perm_group.hpp"

namespace stablegraph {

// Subgroup types of S3; all subgroups of equal order are conjugate.
enum class S3Type { Trivial, C2, C3, Full };

int s3_order(S3Type t);
S3Type s3_type_from_order(int order);
// "1", "c2", "c3", "s3".
std::string to_string(S3Type t);
std::optional<S3Type> s3_type_from_string(const std::string& name);

// l(G): edges whose halves meet the same vertex.
int loop_count(const WeightedGraph& g);

// Weight-preserving vertex permutations that preserve edge multiplicities.
std::vector<Permutation> vertex_automorphisms(const WeightedGraph& g);

// Aut(G) as a group of half-edge bijections commuting with the pairing and
// inducing a weight-preserving vertex map. Loop flips and permutations of
// parallel edges are included.
PermGroup automorphism_group(const WeightedGraph& g);

// Vertex map induced by a half-edge automorphism.
Permutation induced_vertex_map(const WeightedGraph& g, const Permutation& alpha);
// Edge permutation induced by a half-edge automorphism.
Permutation induced_edge_map(const WeightedGraph& g, const Permutation& alpha);

// The Klein four-group {id, (12)(34), (13)(24), (14)(23)} inside S4.
PermGroup klein_four();

// The single weight-0 degree-4 vertex of a 1-stratum graph, if any.
std::optional<VertexId> degree_four_vertex(const WeightedGraph& g);

// sigma(alpha): the permutation alpha induces on the four half-edges at v0,
// labelled 0..3 in ascending half-edge order. Requires w(v0)=0, deg(v0)=4 and
// v0 fixed by every automorphism.
Permutation sigma_of(const WeightedGraph& g, VertexId v0, const Permutation& alpha);
PermGroup sigma_image(const WeightedGraph& g, VertexId v0);
// |sigma^-1(V4)|.
int kernel_v4_order(const WeightedGraph& g, VertexId v0);
// Image of Aut(G) in S4/V4 ~ S3, classified by its order.
S3Type r_group(const WeightedGraph& g, VertexId v0);

}  // namespace stablegraph
