#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablegraph/canonical.hpp"
#include "stablegraph/cross_ratio.hpp"
#include "stablegraph/graph.hpp"
#include "stablegraph/symmetry.hpp"

namespace stablegraph {

// Deg4: all weights 0, one vertex of degree 4. Weight1: one vertex of
// weight 1 and degree 1.
enum class ComponentKind { Deg4, Weight1 };

std::string to_string(ComponentKind k);

struct BoundaryEntry {
  CanonicalKey key;
  int ord = 0;
  bool smooth = false;
};

struct OneStratumReport {
  CanonicalKey key;
  ComponentKind kind = ComponentKind::Deg4;
  int aut_order = 0;
  // Degree of the normalisation over the component; equals |Aut|.
  int normalization_degree = 0;
  // |sigma^-1(V4)| for Deg4, 2 |Aut| for Weight1.
  int kernel_or_gerbe_order = 0;
  std::optional<S3Type> r_type;  // Deg4 only
  Signature orbifold;
  std::vector<BoundaryEntry> boundary;  // sorted by key
  std::string coarse_space = "P1";
};

// Concrete image of Aut(G) in S3 through the cross-ratio action of the
// permutations of the four half-edges at the degree-4 vertex.
S3Subgroup residual_subgroup(const WeightedGraph& g);

// Throws PreconditionError unless g is a stable graph of dimension 1.
OneStratumReport classify(const WeightedGraph& g);
std::vector<OneStratumReport> classify_all(int genus);

struct OrbifoldWitness {
  int genus = 0;
  CanonicalKey key;
};

// For each of the four Deg4 signatures, the first genus <= max_genus with a
// component realising it and the smallest such key; nullopt when absent.
std::map<std::string, std::optional<OrbifoldWitness>> find_orbifold_examples(int max_genus);

}  // namespace stablegraph
