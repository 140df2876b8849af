#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "stablegraph/canonical.hpp"
#include "stablegraph/enumeration.hpp"
#include "stablegraph/moves.hpp"
#include "stablegraph/one_stratum.hpp"
#include "stablegraph/symmetry.hpp"

using namespace stablegraph;

namespace {

// Reverse the vertex order, rotate the edge list and flip every edge.
WeightedGraph scramble(const WeightedGraph& g) {
  const int c = g.vertex_count();
  std::vector<int> w(c);
  for (int v = 0; v < c; ++v) w[c - 1 - v] = g.weight(v);
  auto edges = g.edge_list();
  std::rotate(edges.begin(), edges.begin() + edges.size() / 2, edges.end());
  for (auto& [u, v] : edges) {
    u = c - 1 - u;
    v = c - 1 - v;
    std::swap(u, v);
  }
  return WeightedGraph::from_edges(w, edges);
}

std::vector<WeightedGraph> legal_moves(const WeightedGraph& g) {
  std::vector<WeightedGraph> out;
  for (int e = 0; e < g.edge_count(); ++e) out.push_back(shrink(g, e));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.weight(v) == 0 && g.degree(v) == 4) {
      for (auto& [p, h] : pops_deg4(g, v)) out.push_back(std::move(h));
    }
    if (g.weight(v) == 1 && g.degree(v) == 1) out.push_back(pop_weight1(g, v));
  }
  return out;
}

}  // namespace

TEST_CASE("moves preserve genus and stability") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_classes(g)) {
      for (const auto& h : legal_moves(c.graph)) {
        CHECK(is_stable(h).stable);
        CHECK(weighted_genus(h) == g);
      }
    }
  }
}

TEST_CASE("loop flips divide the automorphism group") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_classes(g)) {
      const auto order = automorphism_group(c.graph).order();
      CHECK(order % (std::size_t{1} << loop_count(c.graph)) == 0);
    }
  }
}

TEST_CASE("automorphism groups agree with exhaustive search for small graphs") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_classes(g)) {
      if (c.graph.half_edge_count() > 12) continue;
      const auto group = automorphism_group(c.graph);
      const auto brute = oracle::automorphisms(c.graph);
      CHECK(std::set<Permutation>(group.elements().begin(), group.elements().end()) ==
            std::set<Permutation>(brute.begin(), brute.end()));
    }
  }
}

TEST_CASE("keys agree with brute-force isomorphism on low strata") {
  std::vector<WeightedGraph> graphs;
  for (int g = 2; g <= 3; ++g) {
    for (int i = 0; i <= 1; ++i) {
      for (const auto& c : enumerate_stratum_classes(g, i)) {
        graphs.push_back(c.graph);
        graphs.push_back(scramble(c.graph));
      }
    }
  }
  for (const auto& a : graphs) {
    for (const auto& b : graphs) CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("keys are invariant under scrambling") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_classes(g)) CHECK(canonical_key(scramble(c.graph)) == c.key);
  }
}

TEST_CASE("genus identities over all classes") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_classes(g)) {
      CHECK(c.graph.total_weight() + standard_genus(c.graph) == g);
      CHECK(standard_genus(c.graph) == oracle::cycle_rank(c.graph));
      CHECK(dimension(c.graph) == 3 * g - 3 - c.graph.edge_count());
    }
  }
}

TEST_CASE("one-stratum shape") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_stratum_classes(g, 1)) {
      int deg4 = 0;
      int leaf1 = 0;
      for (int v = 0; v < c.graph.vertex_count(); ++v) {
        deg4 += c.graph.weight(v) == 0 && c.graph.degree(v) == 4;
        leaf1 += c.graph.weight(v) == 1 && c.graph.degree(v) == 1;
      }
      CHECK(deg4 + leaf1 == 1);
    }
  }
}

TEST_CASE("pops are undone by shrinking the new edge") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_stratum_classes(g, 1)) {
      if (auto v0 = degree_four_vertex(c.graph)) {
        for (const auto& [p, h] : pops_deg4(c.graph, *v0)) {
          CHECK(oracle::isomorphic(shrink(h, h.edge_count() - 1), c.graph));
        }
      } else {
        for (int v = 0; v < c.graph.vertex_count(); ++v) {
          if (c.graph.weight(v) != 1) continue;
          const auto h = pop_weight1(c.graph, v);
          CHECK(oracle::isomorphic(shrink(h, h.edge_count() - 1), c.graph));
        }
      }
    }
  }
}

TEST_CASE("boundary classes are the Aut-orbits of the pairings") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_stratum_classes(g, 1)) {
      const auto v0 = degree_four_vertex(c.graph);
      if (!v0) continue;
      // Aut acts on the three pairings through sigma.
      std::vector<Permutation> action;
      const auto group = automorphism_group(c.graph);
      for (const auto& a : group.generators()) {
        const auto s = sigma_of(c.graph, *v0, a);
        Permutation on_pairings(3);
        for (int p = 0; p < 3; ++p) {
          const auto slots = pairing_slots(static_cast<Pairing>(p + 1));
          std::pair<int, int> img{s[slots[0].first], s[slots[0].second]};
          if (img.first > img.second) std::swap(img.first, img.second);
          for (int q = 0; q < 3; ++q) {
            const auto other = pairing_slots(static_cast<Pairing>(q + 1));
            if (other[0] == img || other[1] == img) on_pairings[p] = q;
          }
        }
        action.push_back(on_pairings);
      }
      const auto n_orbits = orbits(3, action).size();
      const auto boundary = boundary_graphs(c.graph);
      CHECK(boundary.size() == n_orbits);
      const auto report = classify(c.graph);
      CHECK(boundary.size() == report.orbifold.closure.size());
    }
  }
}

TEST_CASE("shrinkable edges form one orbit") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_stratum_classes(g, 1)) {
      for (const auto& bp : boundary_graphs(c.graph)) {
        CHECK(transitivity_check(c.graph, graph_from_key(bp.key)));
      }
    }
  }
}

TEST_CASE("sigma data agrees with exhaustive search") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& c : enumerate_stratum_classes(g, 1)) {
      const auto v0 = degree_four_vertex(c.graph);
      if (!v0) continue;
      const auto brute = oracle::sigma_data(c.graph);
      CHECK(brute.aut_order == static_cast<int>(automorphism_group(c.graph).order()));
      CHECK(brute.kernel_order == kernel_v4_order(c.graph, *v0));
      CHECK(brute.image_order == static_cast<int>(sigma_image(c.graph, *v0).order()));
      CHECK(brute.aut_order % brute.kernel_order == 0);
      // The residual type does not depend on the presentation.
      const auto s = scramble(c.graph);
      CHECK(r_group(s, *degree_four_vertex(s)) == r_group(c.graph, *v0));
    }
  }
}

TEST_CASE("normal form reduction for every 0-stratum class") {
  for (int g = 2; g <= 4; ++g) {
    const auto target = caterpillar(g);
    for (const auto& c : enumerate_stratum_classes(g, 0)) {
      const auto seq = normal_form_reduce(c.graph);
      CHECK_FALSE(verify_sequence(seq).has_value());
      CHECK(oracle::isomorphic(seq.end(), target));
      CHECK(static_cast<int>(seq.steps.size()) <= 12 * g);
      CHECK(bfs_reachable(c.graph, target).has_value());
    }
  }
}
