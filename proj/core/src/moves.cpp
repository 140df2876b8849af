#include "stablegraph/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "stablegraph/enumeration.hpp"
#include "stablegraph/error.hpp"
#include "stablegraph/perm_group.hpp"
#include "stablegraph/symmetry.hpp"
#include "stablegraph/wsg.hpp"

namespace stablegraph {
namespace {

WeightedGraph build(std::vector<int> weights, const std::vector<VertexId>& attach) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t h = 0; h + 1 < attach.size(); h += 2) edges.emplace_back(attach[h], attach[h + 1]);
  return WeightedGraph::from_edges(std::move(weights), edges);
}

HalfEdgeId half_at(const WeightedGraph& g, EdgeId e, VertexId v) {
  if (g.attach(2 * e) == v) return 2 * e;
  if (g.attach(2 * e + 1) == v) return 2 * e + 1;
  throw InternalError("edge does not meet vertex");
}

Pairing pairing_joining(int i, int j) {
  if (i > j) std::swap(i, j);
  if ((i == 0 && j == 1) || (i == 2 && j == 3)) return Pairing::P12_34;
  if ((i == 0 && j == 2) || (i == 1 && j == 3)) return Pairing::P13_24;
  return Pairing::P14_23;
}

// Pairing at v0 that keeps half-edges a and b on the same new vertex.
Pairing pairing_keeping(const WeightedGraph& g, VertexId v0, HalfEdgeId a, HalfEdgeId b) {
  const auto at = g.half_edges_at(v0);
  const auto i = std::find(at.begin(), at.end(), a) - at.begin();
  const auto j = std::find(at.begin(), at.end(), b) - at.begin();
  return pairing_joining(static_cast<int>(i), static_cast<int>(j));
}

void require_one_stratum(const WeightedGraph& g) {
  const auto diag = is_stable(g);
  if (!diag.stable || dimension(g) != 1) throw PreconditionError("not a 1-stratum graph");
}

void require_zero_stratum(const WeightedGraph& g) {
  const auto diag = is_stable(g);
  if (!diag.stable || dimension(g) != 0) throw PreconditionError("not a 0-stratum graph");
}

// Every way to pop a 1-stratum graph.
std::vector<MoveStep> pop_steps(const WeightedGraph& g) {
  std::vector<MoveStep> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.weight(v) == 0 && g.degree(v) == 4) {
      for (Pairing p : {Pairing::P12_34, Pairing::P13_24, Pairing::P14_23}) {
        MoveStep s;
        s.kind = MoveKind::PopDeg4;
        s.vertex = v;
        s.pairing = p;
        out.push_back(s);
      }
    } else if (g.weight(v) == 1 && g.degree(v) == 1) {
      MoveStep s;
      s.kind = MoveKind::PopWeight1;
      s.vertex = v;
      out.push_back(s);
    }
  }
  return out;
}

MoveStep shrink_step(EdgeId e) {
  MoveStep s;
  s.kind = MoveKind::Shrink;
  s.edge = e;
  return s;
}

// Records steps on a working graph and enforces the step bound.
class Recorder {
 public:
  Recorder(const WeightedGraph& start, int bound) : bound_(bound) { seq_.graphs.push_back(start); }

  const WeightedGraph& current() const { return seq_.graphs.back(); }

  void push(MoveStep step) {
    if (static_cast<int>(seq_.steps.size()) >= bound_) {
      throw InternalError("normal form reduction exceeded " + std::to_string(bound_) + " moves");
    }
    WeightedGraph next = apply(current(), step);
    step.source = canonical_key(current());
    step.target = canonical_key(next);
    seq_.steps.push_back(std::move(step));
    seq_.graphs.push_back(std::move(next));
  }

  MoveSequence take() { return std::move(seq_); }

 private:
  int bound_;
  MoveSequence seq_;
};

// Shortest path between u and v avoiding edge `skip` and loops, as a list of
// edges from u to v.
std::optional<std::vector<EdgeId>> shortest_path(const WeightedGraph& g, VertexId u, VertexId v,
                                                 EdgeId skip) {
  const int c = g.vertex_count();
  std::vector<EdgeId> via(c, -1);
  std::vector<bool> seen(c, false);
  std::deque<VertexId> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (HalfEdgeId h : g.half_edges_at(x)) {
      const EdgeId e = WeightedGraph::edge_of(h);
      if (e == skip || g.is_loop(e)) continue;
      const VertexId y = g.attach(WeightedGraph::opposite(h));
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId x = v; x != u;) {
    const EdgeId e = via[x];
    path.push_back(e);
    auto [a, b] = g.endpoints(e);
    x = a == x ? b : a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct Cycle {
  // edges[i] joins vertices[i] and vertices[i + 1 mod k].
  std::vector<EdgeId> edges;
};

// A shortest non-loop cycle, choosing the first edge to shrink by the
// canonical key of the shrink result.
std::optional<Cycle> minimal_cycle(const WeightedGraph& g) {
  std::optional<Cycle> best;
  std::optional<CanonicalKey> best_key;
  std::size_t best_len = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    auto [u, v] = g.endpoints(e);
    const auto path = shortest_path(g, v, u, e);
    if (!path) continue;
    const std::size_t len = path->size() + 1;
    if (best && len > best_len) continue;
    const auto key = canonical_key(shrink(g, e));
    if (best && len == best_len && !(key < *best_key)) continue;
    Cycle cyc;
    cyc.edges.push_back(e);
    cyc.edges.insert(cyc.edges.end(), path->begin(), path->end());
    best = std::move(cyc);
    best_key = key;
    best_len = len;
  }
  return best;
}

// Shrink the first cycle edge, then pop so that the two cycle half-edges at
// the merged vertex stay together. The cycle shortens by one.
void reduce_cycle(Recorder& rec, Cycle cyc) {
  while (cyc.edges.size() >= 2) {
    const WeightedGraph& g = rec.current();
    const EdgeId e = cyc.edges.front();
    const EdgeId before = cyc.edges.back();
    const EdgeId after = cyc.edges[1];
    auto [a, b] = g.endpoints(e);
    const VertexId merged = std::min(a, b);
    rec.push(shrink_step(e));

    cyc.edges.erase(cyc.edges.begin());
    for (EdgeId& x : cyc.edges) {
      if (x > e) --x;
    }
    const EdgeId before_now = before > e ? before - 1 : before;
    const EdgeId after_now = after > e ? after - 1 : after;
    const WeightedGraph& s = rec.current();
    HalfEdgeId h1 = 0;
    HalfEdgeId h2 = 0;
    if (before_now == after_now) {
      h1 = 2 * before_now;
      h2 = 2 * before_now + 1;
    } else {
      h1 = half_at(s, before_now, merged);
      h2 = half_at(s, after_now, merged);
    }
    MoveStep pop;
    pop.kind = MoveKind::PopDeg4;
    pop.vertex = merged;
    pop.pairing = pairing_keeping(s, merged, h1, h2);
    rec.push(pop);
  }
}

bool has_loop(const WeightedGraph& g, VertexId v) {
  for (HalfEdgeId h : g.half_edges_at(v)) {
    if (g.is_loop(WeightedGraph::edge_of(h))) return true;
  }
  return false;
}

// One straightening rewrite on a loop graph whose loop-free core is a tree.
// Returns false when the core is already a path.
bool straighten_once(Recorder& rec) {
  const WeightedGraph& g = rec.current();
  const int c = g.vertex_count();
  std::vector<bool> core(c);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> tree(c);
  int core_size = 0;
  for (VertexId v = 0; v < c; ++v) {
    core[v] = !has_loop(g, v);
    core_size += core[v] ? 1 : 0;
  }
  if (core_size <= 1) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u != v && core[u] && core[v]) {
      tree[u].emplace_back(v, e);
      tree[v].emplace_back(u, e);
    }
  }
  auto bfs = [&](VertexId from, std::vector<VertexId>& parent) {
    std::vector<int> dist(c, -1);
    parent.assign(c, -1);
    std::deque<VertexId> q{from};
    dist[from] = 0;
    VertexId far = from;
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      if (dist[x] > dist[far]) far = x;
      for (auto [y, e] : tree[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        }
      }
    }
    return far;
  };
  VertexId start = 0;
  while (!core[start]) ++start;
  std::vector<VertexId> parent;
  const VertexId a = bfs(start, parent);
  const VertexId b = bfs(a, parent);
  std::vector<VertexId> path;
  for (VertexId x = b; x != -1; x = parent[x]) path.push_back(x);
  if (static_cast<int>(path.size()) == core_size) return false;

  std::vector<int> pos(c, -1);
  for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  for (VertexId m = 0; m < c; ++m) {
    if (!core[m] || pos[m] >= 0) continue;
    for (auto [p, e_mp] : tree[m]) {
      if (pos[p] < 0) continue;
      const int i = pos[p];
      if (i == 0 || i + 1 == static_cast<int>(path.size())) {
        throw InternalError("branch at the end of a longest path");
      }
      EdgeId e_left = -1;
      for (auto [y, e] : tree[p]) {
        if (y == path[i - 1]) e_left = e;
      }
      EdgeId e_up = -1;
      for (HalfEdgeId h : g.half_edges_at(m)) {
        const EdgeId e = WeightedGraph::edge_of(h);
        if (e != e_mp) {
          e_up = e;
          break;
        }
      }
      const VertexId merged = std::min(m, p);
      rec.push(shrink_step(e_mp));
      const EdgeId left_now = e_left > e_mp ? e_left - 1 : e_left;
      const EdgeId up_now = e_up > e_mp ? e_up - 1 : e_up;
      const WeightedGraph& s = rec.current();
      MoveStep pop;
      pop.kind = MoveKind::PopDeg4;
      pop.vertex = merged;
      pop.pairing = pairing_keeping(s, merged, half_at(s, left_now, merged), half_at(s, up_now, merged));
      rec.push(pop);
      return true;
    }
  }
  throw InternalError("core tree is not a path but has no branch vertex");
}

}  // namespace

std::array<std::pair<int, int>, 2> pairing_slots(Pairing p) {
  switch (p) {
    case Pairing::P12_34: return {{{0, 1}, {2, 3}}};
    case Pairing::P13_24: return {{{0, 2}, {1, 3}}};
    case Pairing::P14_23: return {{{0, 3}, {1, 2}}};
  }
  throw InternalError("bad pairing");
}

WeightedGraph shrink(const WeightedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
  auto [u, v] = g.endpoints(e);
  std::vector<int> weights(g.weights().begin(), g.weights().end());
  std::vector<VertexId> attach;
  attach.reserve(g.half_edge_count() - 2);
  if (u == v) {
    ++weights[u];
    for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h) {
      if (WeightedGraph::edge_of(h) != e) attach.push_back(g.attach(h));
    }
    return build(std::move(weights), attach);
  }
  const VertexId keep = std::min(u, v);
  const VertexId drop = std::max(u, v);
  weights[keep] += weights[drop];
  weights.erase(weights.begin() + drop);
  for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h) {
    if (WeightedGraph::edge_of(h) == e) continue;
    VertexId x = g.attach(h);
    if (x == drop) x = keep;
    if (x > drop) --x;
    attach.push_back(x);
  }
  return build(std::move(weights), attach);
}

WeightedGraph pop_deg4(const WeightedGraph& g, VertexId v0, Pairing pairing) {
  if (v0 < 0 || v0 >= g.vertex_count()) throw PreconditionError("vertex id out of range");
  if (g.weight(v0) != 0 || g.degree(v0) != 4) {
    throw PreconditionError("pop needs a weight-0 vertex of degree 4");
  }
  const auto at = g.half_edges_at(v0);
  const auto slots = pairing_slots(pairing);
  std::vector<int> weights(g.weights().begin(), g.weights().end());
  const VertexId fresh = g.vertex_count();
  weights.push_back(0);
  std::vector<VertexId> attach(g.attachments().begin(), g.attachments().end());
  const auto& moved = slots[0].first == 0 ? slots[1] : slots[0];
  attach[at[moved.first]] = fresh;
  attach[at[moved.second]] = fresh;
  attach.push_back(v0);
  attach.push_back(fresh);
  return build(std::move(weights), attach);
}

std::vector<std::pair<Pairing, WeightedGraph>> pops_deg4(const WeightedGraph& g, VertexId v0) {
  std::vector<std::pair<Pairing, WeightedGraph>> out;
  for (Pairing p : {Pairing::P12_34, Pairing::P13_24, Pairing::P14_23}) out.emplace_back(p, pop_deg4(g, v0, p));
  return out;
}

WeightedGraph pop_weight1(const WeightedGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex id out of range");
  if (g.weight(v) != 1 || g.degree(v) != 1) {
    throw PreconditionError("weight-1 pop needs a weight-1 vertex of degree 1");
  }
  std::vector<int> weights(g.weights().begin(), g.weights().end());
  weights[v] = 0;
  std::vector<VertexId> attach(g.attachments().begin(), g.attachments().end());
  attach.push_back(v);
  attach.push_back(v);
  return build(std::move(weights), attach);
}

WeightedGraph apply(const WeightedGraph& g, const MoveStep& step) {
  switch (step.kind) {
    case MoveKind::Shrink: return shrink(g, step.edge);
    case MoveKind::PopDeg4: return pop_deg4(g, step.vertex, step.pairing);
    case MoveKind::PopWeight1: return pop_weight1(g, step.vertex);
  }
  throw InternalError("bad move kind");
}

std::vector<EdgeId> shrinkable_edges(const WeightedGraph& gx, const WeightedGraph& g) {
  const auto target = canonical_key(g);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < gx.edge_count(); ++e) {
    const auto s = shrink(gx, e);
    if (s.vertex_count() == g.vertex_count() && canonical_key(s) == target) out.push_back(e);
  }
  return out;
}

std::vector<BoundaryPoint> boundary_graphs(const WeightedGraph& g) {
  require_one_stratum(g);
  std::map<CanonicalKey, WeightedGraph> classes;
  for (const auto& step : pop_steps(g)) {
    auto popped = apply(g, step);
    classes.emplace(canonical_key(popped), std::move(popped));
  }
  std::vector<BoundaryPoint> out;
  for (const auto& [key, rep] : classes) {
    out.push_back({key, static_cast<int>(shrinkable_edges(rep, g).size())});
  }
  return out;
}

bool transitivity_check(const WeightedGraph& g, const WeightedGraph& gx) {
  const auto edges = shrinkable_edges(gx, g);
  if (edges.empty()) throw PreconditionError("not a boundary graph of the given graph");
  const auto aut = automorphism_group(gx);
  std::vector<Permutation> action;
  for (const auto& alpha : aut.generators()) action.push_back(induced_edge_map(gx, alpha));
  const auto parts = orbits(gx.edge_count(), action);
  for (const auto& orbit : parts) {
    if (std::find(orbit.begin(), orbit.end(), edges.front()) == orbit.end()) continue;
    return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) {
      return std::find(orbit.begin(), orbit.end(), e) != orbit.end();
    });
  }
  return false;
}

bool is_smooth_point(int ord) {
  if (ord < 1) throw PreconditionError("ord " + std::to_string(ord) + " is not a boundary point");
  return ord == 1;
}

StratumAdjacency one_stratum_adjacency(int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2");
  StratumAdjacency adj;
  adj.genus = genus;
  adj.nodes = enumerate_stratum(genus, 0);
  const auto index_of = [&](const CanonicalKey& key) {
    const auto it = std::lower_bound(adj.nodes.begin(), adj.nodes.end(), key);
    if (it == adj.nodes.end() || *it != key) throw InternalError("pop left the 0-stratum");
    return static_cast<int>(it - adj.nodes.begin());
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& cls : enumerate_stratum_classes(genus, 1)) {
    const auto boundary = boundary_graphs(cls.graph);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      for (std::size_t j = i + 1; j < boundary.size(); ++j) {
        int a = index_of(boundary[i].key);
        int b = index_of(boundary[j].key);
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  adj.edges = std::move(edges);

  const int n = static_cast<int>(adj.nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [a, b] : adj.edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  adj.connected = components == 1;
  return adj;
}

WeightedGraph caterpillar(int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2");
  if (genus == 2) return named::dumbbell();
  const int spine = genus - 2;
  std::vector<int> weights(spine, 0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < spine; ++i) {
    const int spine_degree = (i > 0 ? 1 : 0) + (i + 1 < spine ? 1 : 0);
    for (int k = 0; k < 3 - spine_degree; ++k) {
      const VertexId leaf = static_cast<VertexId>(weights.size());
      weights.push_back(0);
      edges.emplace_back(i, leaf);
      edges.emplace_back(leaf, leaf);
    }
  }
  return WeightedGraph::from_edges(std::move(weights), edges);
}

MoveSequence normal_form_reduce(const WeightedGraph& g) {
  require_zero_stratum(g);
  const int genus = weighted_genus(g);
  Recorder rec(g, 12 * genus);
  while (auto cyc = minimal_cycle(rec.current())) reduce_cycle(rec, std::move(*cyc));
  while (straighten_once(rec)) {
  }
  auto seq = rec.take();
  if (!are_isomorphic(seq.end(), caterpillar(genus))) {
    throw InternalError("reduction ended away from the loop-chain normal form");
  }
  return seq;
}

std::optional<MoveSequence> bfs_reachable(const WeightedGraph& from, const WeightedGraph& to) {
  require_zero_stratum(from);
  require_zero_stratum(to);
  if (weighted_genus(from) != weighted_genus(to)) throw PreconditionError("genus mismatch");

  const auto start = canonical_key(from);
  const auto goal = canonical_key(to);
  std::map<CanonicalKey, CanonicalKey> parent{{start, start}};
  std::deque<std::pair<CanonicalKey, WeightedGraph>> queue{{start, canonical_form(from)}};
  bool found = start == goal;
  while (!queue.empty() && !found) {
    auto [key, graph] = std::move(queue.front());
    queue.pop_front();
    for (EdgeId e = 0; e < graph.edge_count() && !found; ++e) {
      const auto mid = shrink(graph, e);
      for (const auto& pop : pop_steps(mid)) {
        auto next = apply(mid, pop);
        auto next_key = canonical_key(next);
        if (parent.count(next_key)) continue;
        parent.emplace(next_key, key);
        if (next_key == goal) {
          found = true;
          break;
        }
        queue.emplace_back(std::move(next_key), std::move(next));
      }
    }
  }
  if (!found) return std::nullopt;

  std::vector<CanonicalKey> hops;
  for (CanonicalKey k = goal; k != start; k = parent.at(k)) hops.push_back(k);
  std::reverse(hops.begin(), hops.end());

  Recorder rec(from, static_cast<int>(2 * hops.size()));
  for (const auto& target : hops) {
    const WeightedGraph cur = rec.current();
    bool done = false;
    for (EdgeId e = 0; e < cur.edge_count() && !done; ++e) {
      const auto mid = shrink(cur, e);
      for (const auto& pop : pop_steps(mid)) {
        if (canonical_key(apply(mid, pop)) == target) {
          rec.push(shrink_step(e));
          rec.push(pop);
          done = true;
          break;
        }
      }
    }
    if (!done) throw InternalError("lost a BFS hop while rebuilding the path");
  }
  return rec.take();
}

std::optional<std::string> verify_sequence(const MoveSequence& seq) {
  if (seq.graphs.size() != seq.steps.size() + 1) return "graph count does not match step count";
  const int genus = weighted_genus(seq.graphs.front());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& step = seq.steps[i];
    const auto where = "step " + std::to_string(i + 1) + ": ";
    WeightedGraph next;
    try {
      next = apply(seq.graphs[i], step);
    } catch (const Error& e) {
      return where + "illegal move: " + e.what();
    }
    if (!(next == seq.graphs[i + 1])) return where + "recorded graph differs from the replay";
    if (step.source != canonical_key(seq.graphs[i])) return where + "source key mismatch";
    if (step.target != canonical_key(next)) return where + "target key mismatch";
    if (!is_stable(next).stable) return where + "result is unstable";
    if (weighted_genus(next) != genus) return where + "genus changed";
  }
  return std::nullopt;
}

std::string to_string(const MoveStep& step) {
  switch (step.kind) {
    case MoveKind::Shrink: return "shrink e" + std::to_string(step.edge + 1);
    case MoveKind::PopDeg4:
      return "pop v" + std::to_string(step.vertex + 1) + " p" +
             std::to_string(static_cast<int>(step.pairing));
    case MoveKind::PopWeight1: return "pop1 v" + std::to_string(step.vertex + 1);
  }
  return "?";
}

std::string format_sequence(const MoveSequence& seq, bool with_graphs) {
  std::ostringstream out;
  if (with_graphs) out << write_wsg(seq.graphs.front());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    out << to_string(seq.steps[i]) << "\n";
    if (with_graphs) out << write_wsg(seq.graphs[i + 1]);
  }
  return out.str();
}

}  // namespace stablegraph
