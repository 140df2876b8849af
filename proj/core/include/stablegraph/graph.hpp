#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stablegraph {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

// Connected-or-not multigraph with loops and natural vertex weights, stored in
// half-edge form. Edge e owns half-edges 2e and 2e+1, so the pairing
// involution is h -> h ^ 1 and never has fixed points. A loop is an edge
// whose two halves attach to the same vertex.
class WeightedGraph {
 public:
  // A single vertex of weight 0 and no edges.
  WeightedGraph();

  // Edge endpoints are 0-based vertex indices; (u, u) is a loop.
  static WeightedGraph from_edges(std::vector<int> weights,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges);

  // General half-edge presentation: attach[h] is the vertex of half-edge h
  // and pairing must be a fixed-point-free involution. Edges are renumbered
  // by their smallest half-edge.
  static WeightedGraph from_half_edges(std::vector<int> weights,
                                       const std::vector<VertexId>& attach,
                                       const std::vector<HalfEdgeId>& pairing);

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  int edge_count() const { return static_cast<int>(attach_.size() / 2); }
  int half_edge_count() const { return static_cast<int>(attach_.size()); }

  int weight(VertexId v) const;
  std::span<const int> weights() const { return weights_; }
  int total_weight() const;

  VertexId attach(HalfEdgeId h) const;
  std::span<const VertexId> attachments() const { return attach_; }
  static HalfEdgeId opposite(HalfEdgeId h) { return h ^ 1; }
  static EdgeId edge_of(HalfEdgeId h) { return h / 2; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;
  bool is_loop(EdgeId e) const;

  // Loops count twice.
  int degree(VertexId v) const;
  // Half-edges attached to v, ascending.
  std::vector<HalfEdgeId> half_edges_at(VertexId v) const;
  // Symmetric matrix of edge multiplicities; the diagonal counts loops.
  std::vector<std::vector<int>> adjacency() const;

  bool is_connected() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  WeightedGraph(std::vector<int> weights, std::vector<VertexId> attach);

  std::vector<int> weights_;
  std::vector<VertexId> attach_;
};

struct GraphDiagnostics {
  bool connected = false;
  int min_mult = 0;
  int genus = 0;
  bool stable = false;
  std::vector<std::string> failures;
};

// h + n - c + 1.
int weighted_genus(const WeightedGraph& g);
// First Betti number n - c + 1; throws PreconditionError when disconnected.
int standard_genus(const WeightedGraph& g);
// 3 w(v) + deg(v).
int multiplicity(const WeightedGraph& g, VertexId v);
GraphDiagnostics is_stable(const WeightedGraph& g);
// Sum of mult(v) - 3, i.e. the stratum index. Requires a stable graph.
int dimension(const WeightedGraph& g);

// Graphs used throughout tests, tools and docs.
namespace named {
WeightedGraph theta();
WeightedGraph dumbbell();
WeightedGraph two_loop_vertex();
// [w1]--[w0 + loop]
WeightedGraph weight_one_tail();
WeightedGraph k4();
// K4 with one edge contracted: v0 doubly joined to c and d, plus c--d.
WeightedGraph contracted_k4();
}  // namespace named

}  // namespace stablegraph
