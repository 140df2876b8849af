#include "stablegraph/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stablegraph/canonical.hpp"
#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

// Half-edges of the edges joining u and v (u != v), as (half at u, half at v)
// in edge index order; for u == v the two halves of each loop.
std::vector<std::pair<HalfEdgeId, HalfEdgeId>> bundle(const WeightedGraph& g, VertexId u, VertexId v) {
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (a == u && b == v) {
      out.emplace_back(2 * e, 2 * e + 1);
    } else if (a == v && b == u) {
      out.emplace_back(2 * e + 1, 2 * e);
    }
  }
  return out;
}

Permutation lift(const WeightedGraph& g, const Permutation& vmap) {
  Permutation alpha(g.half_edge_count(), -1);
  const int c = g.vertex_count();
  for (VertexId u = 0; u < c; ++u) {
    for (VertexId v = u; v < c; ++v) {
      const auto from = bundle(g, u, v);
      if (from.empty()) continue;
      const auto to = bundle(g, vmap[u], vmap[v]);
      for (std::size_t k = 0; k < from.size(); ++k) {
        alpha[from[k].first] = to[k].first;
        alpha[from[k].second] = to[k].second;
      }
    }
  }
  return alpha;
}

void search_vertex_maps(const std::vector<std::vector<int>>& adj, const std::vector<int>& colors,
                        Permutation& map, std::vector<bool>& used, int depth,
                        std::vector<Permutation>& out) {
  const int c = static_cast<int>(adj.size());
  if (depth == c) {
    out.push_back(map);
    return;
  }
  for (int target = 0; target < c; ++target) {
    if (used[target] || colors[target] != colors[depth]) continue;
    bool ok = adj[depth][depth] == adj[target][target];
    for (int prev = 0; ok && prev < depth; ++prev) ok = adj[depth][prev] == adj[target][map[prev]];
    if (!ok) continue;
    map[depth] = target;
    used[target] = true;
    search_vertex_maps(adj, colors, map, used, depth + 1, out);
    used[target] = false;
  }
}

}  // namespace

int s3_order(S3Type t) {
  switch (t) {
    case S3Type::Trivial: return 1;
    case S3Type::C2: return 2;
    case S3Type::C3: return 3;
    case S3Type::Full: return 6;
  }
  return 0;
}

S3Type s3_type_from_order(int order) {
  switch (order) {
    case 1: return S3Type::Trivial;
    case 2: return S3Type::C2;
    case 3: return S3Type::C3;
    case 6: return S3Type::Full;
    default: throw InternalError("subgroup of S3 with order " + std::to_string(order));
  }
}

std::string to_string(S3Type t) {
  switch (t) {
    case S3Type::Trivial: return "1";
    case S3Type::C2: return "c2";
    case S3Type::C3: return "c3";
    case S3Type::Full: return "s3";
  }
  return "?";
}

std::optional<S3Type> s3_type_from_string(const std::string& name) {
  if (name == "1") return S3Type::Trivial;
  if (name == "c2") return S3Type::C2;
  if (name == "c3") return S3Type::C3;
  if (name == "s3") return S3Type::Full;
  return std::nullopt;
}

int loop_count(const WeightedGraph& g) {
  int loops = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) loops += g.is_loop(e) ? 1 : 0;
  return loops;
}

std::vector<Permutation> vertex_automorphisms(const WeightedGraph& g) {
  const auto adj = g.adjacency();
  const auto colors = refined_colors(g);
  Permutation map(g.vertex_count(), -1);
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<Permutation> out;
  search_vertex_maps(adj, colors, map, used, 0, out);
  return out;
}

PermGroup automorphism_group(const WeightedGraph& g) {
  const int hcount = g.half_edge_count();
  std::vector<Permutation> gens;

  // Lifts of enough vertex automorphisms to generate the vertex group.
  std::set<Permutation> vertex_closure{identity_permutation(g.vertex_count())};
  for (const auto& vmap : vertex_automorphisms(g)) {
    if (vertex_closure.count(vmap)) continue;
    gens.push_back(lift(g, vmap));
    std::vector<Permutation> frontier(vertex_closure.begin(), vertex_closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& gen : gens) {
          auto y = compose(induced_vertex_map(g, gen), x);
          if (vertex_closure.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }

  // Automorphisms fixing every vertex: swaps inside parallel bundles and
  // loop flips.
  const int c = g.vertex_count();
  for (VertexId u = 0; u < c; ++u) {
    for (VertexId v = u; v < c; ++v) {
      const auto b = bundle(g, u, v);
      for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        auto p = identity_permutation(hcount);
        std::swap(p[b[k].first], p[b[k + 1].first]);
        std::swap(p[b[k].second], p[b[k + 1].second]);
        gens.push_back(std::move(p));
      }
      if (u == v) {
        for (auto [h1, h2] : b) {
          auto p = identity_permutation(hcount);
          std::swap(p[h1], p[h2]);
          gens.push_back(std::move(p));
        }
      }
    }
  }
  return PermGroup(hcount, std::move(gens));
}

Permutation induced_vertex_map(const WeightedGraph& g, const Permutation& alpha) {
  Permutation vmap = identity_permutation(g.vertex_count());
  for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h) vmap[g.attach(h)] = g.attach(alpha[h]);
  return vmap;
}

Permutation induced_edge_map(const WeightedGraph& g, const Permutation& alpha) {
  Permutation emap(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) emap[e] = WeightedGraph::edge_of(alpha[2 * e]);
  return emap;
}

PermGroup klein_four() {
  return PermGroup(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
}

std::optional<VertexId> degree_four_vertex(const WeightedGraph& g) {
  std::optional<VertexId> found;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.weight(v) == 0 && g.degree(v) == 4) {
      if (found) return std::nullopt;
      found = v;
    }
  }
  return found;
}

namespace {

void check_v0(const WeightedGraph& g, VertexId v0) {
  if (v0 < 0 || v0 >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  if (g.weight(v0) != 0 || g.degree(v0) != 4) {
    throw PreconditionError("sigma needs a weight-0 vertex of degree 4");
  }
}

}  // namespace

Permutation sigma_of(const WeightedGraph& g, VertexId v0, const Permutation& alpha) {
  check_v0(g, v0);
  const auto at = g.half_edges_at(v0);
  Permutation s(4);
  for (int i = 0; i < 4; ++i) {
    const auto it = std::find(at.begin(), at.end(), alpha[at[i]]);
    if (it == at.end()) throw PreconditionError("automorphism moves the degree-4 vertex");
    s[i] = static_cast<int>(it - at.begin());
  }
  return s;
}

PermGroup sigma_image(const WeightedGraph& g, VertexId v0) {
  check_v0(g, v0);
  const auto aut = automorphism_group(g);
  std::vector<Permutation> gens;
  for (const auto& alpha : aut.generators()) gens.push_back(sigma_of(g, v0, alpha));
  return PermGroup(4, std::move(gens));
}

int kernel_v4_order(const WeightedGraph& g, VertexId v0) {
  check_v0(g, v0);
  const auto aut = automorphism_group(g);
  const auto v4 = klein_four();
  int count = 0;
  for (const auto& alpha : aut.elements()) count += v4.contains(sigma_of(g, v0, alpha)) ? 1 : 0;
  return count;
}

S3Type r_group(const WeightedGraph& g, VertexId v0) {
  const auto aut = automorphism_group(g);
  const int kernel = kernel_v4_order(g, v0);
  const auto order = static_cast<int>(aut.order());
  if (order % kernel != 0) throw InternalError("kernel order does not divide |Aut|");
  return s3_type_from_order(order / kernel);
}

}  // namespace stablegraph
