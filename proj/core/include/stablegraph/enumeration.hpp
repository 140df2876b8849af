#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablegraph/canonical.hpp"
#include "stablegraph/graph.hpp"

namespace stablegraph {

struct EnumFilter {
  std::optional<int> edges;
  std::optional<int> components;
  std::optional<int> total_weight;

  // False when all three are set and violate g = h + n - c + 1.
  bool consistent_with(int genus) const;
};

struct GraphClass {
  CanonicalKey key;
  WeightedGraph graph;  // canonical form
};

// Every isomorphism class of stable graphs of weighted genus g that passes
// the filter, sorted by key. Throws PreconditionError for g < 2.
std::vector<GraphClass> enumerate_classes(int genus, const EnumFilter& filter = {});
std::vector<CanonicalKey> enumerate(int genus, const EnumFilter& filter = {});

// Classes of dimension i, i.e. with 3g - 3 - i edges.
std::vector<GraphClass> enumerate_stratum_classes(int genus, int index);
std::vector<CanonicalKey> enumerate_stratum(int genus, int index);

// counts[c - 1][h] for 1 <= c <= 2g - 2 and 0 <= h <= g.
struct GenusTable {
  int genus = 0;
  std::vector<std::vector<int>> counts;

  int at(int components, int total_weight) const { return counts[components - 1][total_weight]; }
  int total() const;
  // Rows c = 1..2g-2, columns h = g..0.
  std::vector<int> row_major() const;
};

GenusTable table(int genus);

// Aligned text matrix with the same row/column order as row_major().
std::string format_table(const GenusTable& t);

}  // namespace stablegraph
