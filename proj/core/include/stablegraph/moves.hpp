#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stablegraph/canonical.hpp"
#include "stablegraph/graph.hpp"

namespace stablegraph {

// Ways to split the four half-edges h0 < h1 < h2 < h3 at a degree-4 vertex
// into two pairs.
enum class Pairing { P12_34 = 1, P13_24 = 2, P14_23 = 3 };

std::array<std::pair<int, int>, 2> pairing_slots(Pairing p);

enum class MoveKind { Shrink, PopDeg4, PopWeight1 };

struct MoveStep {
  MoveKind kind = MoveKind::Shrink;
  EdgeId edge = -1;      // Shrink
  VertexId vertex = -1;  // PopDeg4, PopWeight1
  Pairing pairing = Pairing::P12_34;
  CanonicalKey source;
  CanonicalKey target;
};

// graphs[i] is the working presentation before steps[i]; graphs.back() is
// the endpoint. Edge and vertex ids in a step refer to graphs[i].
struct MoveSequence {
  std::vector<MoveStep> steps;
  std::vector<WeightedGraph> graphs;

  const WeightedGraph& start() const { return graphs.front(); }
  const WeightedGraph& end() const { return graphs.back(); }
};

// Contract a non-loop edge (endpoints merge, weights add) or delete a loop
// and raise its vertex weight by one. Other edges keep their relative order;
// the merged vertex takes the smaller index.
WeightedGraph shrink(const WeightedGraph& g, EdgeId e);

// Split v0 (weight 0, degree 4) into two weight-0 vertices joined by a new
// last edge. The pair containing h0 stays on v0, the other pair moves to a
// new last vertex.
WeightedGraph pop_deg4(const WeightedGraph& g, VertexId v0, Pairing pairing);
std::vector<std::pair<Pairing, WeightedGraph>> pops_deg4(const WeightedGraph& g, VertexId v0);

// Weight 1 -> 0 plus a new last edge that is a loop at v. Requires w(v) = 1
// and deg(v) = 1.
WeightedGraph pop_weight1(const WeightedGraph& g, VertexId v);

WeightedGraph apply(const WeightedGraph& g, const MoveStep& step);

struct BoundaryPoint {
  CanonicalKey key;
  int ord = 0;
};

// Isomorphism classes of the pops of a 1-stratum graph, sorted by key, each
// with the number of its edges whose shrink is isomorphic to g.
std::vector<BoundaryPoint> boundary_graphs(const WeightedGraph& g);

// Edges of gx whose shrink is isomorphic to g.
std::vector<EdgeId> shrinkable_edges(const WeightedGraph& gx, const WeightedGraph& g);

// Whether Aut(gx) permutes the shrinkable edges transitively. Throws
// PreconditionError when gx is not a boundary graph of g.
bool transitivity_check(const WeightedGraph& g, const WeightedGraph& gx);

// ord == 1. Throws PreconditionError for ord < 1.
bool is_smooth_point(int ord);

struct StratumAdjacency {
  int genus = 0;
  std::vector<CanonicalKey> nodes;                 // 0-stratum classes, sorted
  std::vector<std::pair<int, int>> edges;          // indices into nodes, i < j, sorted
  bool connected = false;
};

StratumAdjacency one_stratum_adjacency(int genus);

// Loop-chain normal form of the 0-stratum: a path of g-2 trivalent vertices
// with loop-vertices hanging off it (two at each end, one at each interior
// vertex, three when the path is a single vertex). g = 2 gives the dumbbell.
WeightedGraph caterpillar(int genus);

// Alternating shrink/pop sequence from a 0-stratum graph to caterpillar(g).
// Non-loop cycles are reduced to loops first; the loop tree is then
// straightened into a chain.
MoveSequence normal_form_reduce(const WeightedGraph& g);

// Shortest shrink-then-pop path between two 0-stratum classes.
std::optional<MoveSequence> bfs_reachable(const WeightedGraph& from, const WeightedGraph& to);

// Replays every step; returns a description of the first problem, if any.
std::optional<std::string> verify_sequence(const MoveSequence& seq);

// "shrink e<k>" / "pop v<k> p<i>" / "pop1 v<k>", 1-based ids.
std::string to_string(const MoveStep& step);
std::string format_sequence(const MoveSequence& seq, bool with_graphs);

}  // namespace stablegraph
