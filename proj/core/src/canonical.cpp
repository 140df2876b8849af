#include "stablegraph/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

using Matrix = std::vector<std::vector<int>>;

// Re-rank vertices by signature; returns the number of distinct colours.
int rank_by(std::vector<std::pair<std::vector<int>, int>>& sigs, std::vector<int>& colors) {
  std::sort(sigs.begin(), sigs.end());
  int next = -1;
  const std::vector<int>* prev = nullptr;
  for (auto& [sig, v] : sigs) {
    if (prev == nullptr || sig != *prev) ++next;
    colors[v] = next;
    prev = &sig;
  }
  return next + 1;
}

class Canonizer {
 public:
  explicit Canonizer(const WeightedGraph& g)
      : c_(g.vertex_count()),
        weights_(g.weights().begin(), g.weights().end()),
        adj_(g.adjacency()) {}

  std::vector<int> initial_colors() const {
    std::vector<std::pair<std::vector<int>, int>> sigs;
    sigs.reserve(c_);
    for (int v = 0; v < c_; ++v) {
      int deg = 0;
      for (int u = 0; u < c_; ++u) deg += (u == v ? 2 : 1) * adj_[v][u];
      sigs.push_back({{weights_[v], deg, adj_[v][v]}, v});
    }
    std::vector<int> colors(c_);
    rank_by(sigs, colors);
    return colors;
  }

  int refine(std::vector<int>& colors) const {
    int count = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::pair<std::vector<int>, int>> sigs(c_);
    std::vector<std::pair<int, int>> nbrs;
    while (true) {
      for (int v = 0; v < c_; ++v) {
        nbrs.clear();
        for (int u = 0; u < c_; ++u) {
          if (u != v && adj_[v][u] > 0) nbrs.emplace_back(colors[u], adj_[v][u]);
        }
        std::sort(nbrs.begin(), nbrs.end());
        auto& sig = sigs[v].first;
        sig.clear();
        sig.push_back(colors[v]);
        for (auto [col, mult] : nbrs) {
          sig.push_back(col);
          sig.push_back(mult);
        }
        sigs[v].second = v;
      }
      const int next = rank_by(sigs, colors);
      if (next == count) return count;
      count = next;
    }
  }

  void search(std::vector<int> colors) {
    const int count = refine(colors);
    if (count == c_) {
      visit_leaf(colors);
      return;
    }
    std::vector<int> cell_size(count, 0);
    for (int col : colors) ++cell_size[col];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    for (int v = 0; v < c_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> child = colors;
      // Individualise v: it keeps the cell's colour, the rest of the cell
      // moves just above it, everything above shifts by one.
      for (int u = 0; u < c_; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      }
      search(std::move(child));
    }
  }

  const std::vector<int>& best_labeling() const { return best_labeling_; }

 private:
  void visit_leaf(const std::vector<int>& colors) {
    std::vector<int> order(c_);
    for (int v = 0; v < c_; ++v) order[colors[v]] = v;
    cert_.clear();
    for (int i = 0; i < c_; ++i) cert_.push_back(weights_[order[i]]);
    for (int i = 0; i < c_; ++i) {
      for (int j = i; j < c_; ++j) cert_.push_back(adj_[order[i]][order[j]]);
    }
    // Keep the lexicographically largest certificate.
    if (best_cert_.empty() || std::lexicographical_compare(best_cert_.begin(), best_cert_.end(),
                                                           cert_.begin(), cert_.end())) {
      best_cert_ = cert_;
      best_labeling_ = colors;
    }
  }

  int c_;
  std::vector<int> weights_;
  Matrix adj_;
  std::vector<int> cert_;
  std::vector<int> best_cert_;
  std::vector<int> best_labeling_;
};

std::string format_key(const WeightedGraph& canon) {
  std::string out;
  for (int v = 0; v < canon.vertex_count(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(canon.weight(v));
  }
  out += '|';
  bool first = true;
  for (auto [u, v] : canon.edge_list()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u + 1);
    out += '-';
    out += std::to_string(v + 1);
  }
  return out;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer in key: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<int> refined_colors(const WeightedGraph& g) {
  Canonizer canon(g);
  auto colors = canon.initial_colors();
  canon.refine(colors);
  return colors;
}

std::vector<VertexId> canonical_labeling(const WeightedGraph& g) {
  Canonizer canon(g);
  canon.search(canon.initial_colors());
  return canon.best_labeling();
}

WeightedGraph canonical_form(const WeightedGraph& g) {
  const auto label = canonical_labeling(g);
  std::vector<int> weights(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) weights[label[v]] = g.weight(v);
  auto edges = g.edge_list();
  for (auto& [u, v] : edges) {
    u = label[u];
    v = label[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return WeightedGraph::from_edges(std::move(weights), edges);
}

CanonicalKey canonical_key(const WeightedGraph& g) { return CanonicalKey(format_key(canonical_form(g))); }

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

WeightedGraph graph_from_key(const CanonicalKey& key) {
  const std::string_view text = key.str();
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("key lacks '|': " + key.str());
  std::vector<int> weights;
  for (auto part : split(text.substr(0, bar), ',')) weights.push_back(parse_int(part));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto part : split(text.substr(bar + 1), ',')) {
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) throw ParseError("bad edge in key: " + std::string(part));
    edges.emplace_back(parse_int(part.substr(0, dash)) - 1, parse_int(part.substr(dash + 1)) - 1);
  }
  try {
    return WeightedGraph::from_edges(std::move(weights), edges);
  } catch (const InvalidGraphError& e) {
    throw ParseError(std::string("bad key: ") + e.what());
  }
}

}  // namespace stablegraph
