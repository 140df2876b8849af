#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stablegraph/graph.hpp"

namespace stablegraph {

// Text identity of an isomorphism class. The format is
// "<w1>,...,<wc>|<u>-<v>,..." with 1-based vertices in canonical order and
// edges sorted; equal keys if and only if the graphs are isomorphic.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string text_;
};

// labeling[old_vertex] = canonical position. Isomorphic graphs produce
// identical relabeled graphs.
std::vector<VertexId> canonical_labeling(const WeightedGraph& g);

// The graph relabeled by canonical_labeling, edges sorted.
WeightedGraph canonical_form(const WeightedGraph& g);

CanonicalKey canonical_key(const WeightedGraph& g);

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

// Inverse of canonical_key: the canonical form of the class.
WeightedGraph graph_from_key(const CanonicalKey& key);

// Stable colouring of the vertices by iterated degree/weight refinement.
// Colours are isomorphism invariant: an isomorphism maps each vertex to a
// vertex of the same colour.
std::vector<int> refined_colors(const WeightedGraph& g);

}  // namespace stablegraph
