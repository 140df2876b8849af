#include "stablegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stablegraph/error.hpp"

namespace stablegraph {

WeightedGraph::WeightedGraph() : weights_{0} {}

WeightedGraph::WeightedGraph(std::vector<int> weights, std::vector<VertexId> attach)
    : weights_(std::move(weights)), attach_(std::move(attach)) {}

WeightedGraph WeightedGraph::from_edges(
    std::vector<int> weights, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (weights.empty()) throw InvalidGraphError("graph needs at least one vertex");
  for (int w : weights) {
    if (w < 0) throw InvalidGraphError("negative vertex weight");
  }
  const int c = static_cast<int>(weights.size());
  std::vector<VertexId> attach;
  attach.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= c || v < 0 || v >= c) {
      throw InvalidGraphError("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    attach.push_back(u);
    attach.push_back(v);
  }
  return WeightedGraph(std::move(weights), std::move(attach));
}

WeightedGraph WeightedGraph::from_half_edges(std::vector<int> weights,
                                             const std::vector<VertexId>& attach,
                                             const std::vector<HalfEdgeId>& pairing) {
  if (attach.size() != pairing.size()) {
    throw InvalidGraphError("attach and pairing sizes differ");
  }
  const int hcount = static_cast<int>(pairing.size());
  for (int h = 0; h < hcount; ++h) {
    const int p = pairing[h];
    if (p < 0 || p >= hcount) throw InvalidGraphError("pairing out of range");
    if (p == h) throw InvalidGraphError("pairing has a fixed point");
    if (pairing[p] != h) throw InvalidGraphError("pairing is not an involution");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int h = 0; h < hcount; ++h) {
    if (h < pairing[h]) edges.emplace_back(attach[h], attach[pairing[h]]);
  }
  return from_edges(std::move(weights), edges);
}

int WeightedGraph::weight(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw InvalidGraphError("vertex index out of range");
  return weights_[v];
}

int WeightedGraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0);
}

VertexId WeightedGraph::attach(HalfEdgeId h) const {
  if (h < 0 || h >= half_edge_count()) throw InvalidGraphError("half-edge out of range");
  return attach_[h];
}

std::pair<VertexId, VertexId> WeightedGraph::endpoints(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw InvalidGraphError("edge index out of range");
  return {attach_[2 * e], attach_[2 * e + 1]};
}

std::vector<std::pair<VertexId, VertexId>> WeightedGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) out.emplace_back(attach_[2 * e], attach_[2 * e + 1]);
  return out;
}

bool WeightedGraph::is_loop(EdgeId e) const {
  auto [u, v] = endpoints(e);
  return u == v;
}

int WeightedGraph::degree(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw InvalidGraphError("vertex index out of range");
  return static_cast<int>(std::count(attach_.begin(), attach_.end(), v));
}

std::vector<HalfEdgeId> WeightedGraph::half_edges_at(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw InvalidGraphError("vertex index out of range");
  std::vector<HalfEdgeId> out;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (attach_[h] == v) out.push_back(h);
  }
  return out;
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
  const int c = vertex_count();
  std::vector<std::vector<int>> a(c, std::vector<int>(c, 0));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const int u = attach_[2 * e];
    const int v = attach_[2 * e + 1];
    ++a[u][v];
    if (u != v) ++a[v][u];
  }
  return a;
}

bool WeightedGraph::is_connected() const {
  const int c = vertex_count();
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = c;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const int a = find(attach_[2 * e]);
    const int b = find(attach_[2 * e + 1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

int weighted_genus(const WeightedGraph& g) {
  return g.total_weight() + g.edge_count() - g.vertex_count() + 1;
}

int standard_genus(const WeightedGraph& g) {
  if (!g.is_connected()) throw PreconditionError("not connected");
  return g.edge_count() - g.vertex_count() + 1;
}

int multiplicity(const WeightedGraph& g, VertexId v) { return 3 * g.weight(v) + g.degree(v); }

GraphDiagnostics is_stable(const WeightedGraph& g) {
  GraphDiagnostics d;
  d.connected = g.is_connected();
  d.genus = weighted_genus(g);
  d.min_mult = multiplicity(g, 0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) d.min_mult = std::min(d.min_mult, multiplicity(g, v));
  if (!d.connected) d.failures.emplace_back("not connected");
  if (d.genus < 2) d.failures.push_back("weighted genus " + std::to_string(d.genus) + " < 2");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int m = multiplicity(g, v);
    if (m < 3) {
      d.failures.push_back("vertex " + std::to_string(v + 1) + " has mult " + std::to_string(m) +
                           " < 3");
    }
  }
  d.stable = d.failures.empty();
  return d;
}

int dimension(const WeightedGraph& g) {
  const auto diag = is_stable(g);
  if (!diag.stable) throw InvalidGraphError("dimension requires a stable graph: " + diag.failures.front());
  int dim = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) dim += multiplicity(g, v) - 3;
  return dim;
}

namespace named {

WeightedGraph theta() { return WeightedGraph::from_edges({0, 0}, {{0, 1}, {0, 1}, {0, 1}}); }

WeightedGraph dumbbell() { return WeightedGraph::from_edges({0, 0}, {{0, 0}, {0, 1}, {1, 1}}); }

WeightedGraph two_loop_vertex() { return WeightedGraph::from_edges({0}, {{0, 0}, {0, 0}}); }

WeightedGraph weight_one_tail() { return WeightedGraph::from_edges({1, 0}, {{0, 1}, {1, 1}}); }

WeightedGraph k4() {
  return WeightedGraph::from_edges({0, 0, 0, 0},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

WeightedGraph contracted_k4() {
  return WeightedGraph::from_edges({0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}});
}

}  // namespace named

}  // namespace stablegraph
