#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stablegraph/graph.hpp"

namespace stablegraph {

// WSG text format:
//   wsg 1
//   vertices <c>
//   weights <w1> ... <wc>
//   edges <n>
//   <u> <v>          (n lines, 1-based, u <= v, loop when u == v)
// Lines starting with '#' are comments.
WeightedGraph parse_wsg(std::string_view text);

// Splits a stream of WSG blocks at each "wsg" header.
std::vector<WeightedGraph> parse_wsg_stream(std::string_view text);

// The graph as stored, edges in index order. Edge k (1-based) is line k.
std::string write_wsg(const WeightedGraph& g);

// Canonically relabeled graph with edge lines sorted.
std::string serialize_wsg(const WeightedGraph& g);

// Graphviz description; loops become self-edges.
std::string to_dot(const WeightedGraph& g);

}  // namespace stablegraph
