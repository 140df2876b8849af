#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "stablegraph/graph.hpp"
#include "stablegraph/wsg.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(STABLEGRAPH_TEST_DATA) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline stablegraph::WeightedGraph load(const std::string& name) {
  return stablegraph::parse_wsg(read_data(name));
}

inline stablegraph::WeightedGraph vertex(int w) { return stablegraph::WeightedGraph::from_edges({w}, {}); }

}  // namespace fixtures
