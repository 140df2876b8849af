#include "stablegraph/enumeration.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

using ClassMap = std::map<CanonicalKey, WeightedGraph>;

// Labelled multigraphs with a fixed weight vector and degree sequence,
// filled upper-triangle row by row. Vertices are presorted by
// (weight, degree, loops) so loop counts can be required non-increasing
// within a run of equal weight and degree.
class MatrixFiller {
 public:
  MatrixFiller(const std::vector<int>& weights, const std::vector<int>& degrees, ClassMap& out)
      : c_(static_cast<int>(weights.size())),
        weights_(weights),
        degrees_(degrees),
        rem_(degrees),
        adj_(c_, std::vector<int>(c_, 0)),
        out_(out) {}

  void run() { fill(0, 0); }

 private:
  bool same_kind(int i) const {
    return i > 0 && weights_[i] == weights_[i - 1] && degrees_[i] == degrees_[i - 1];
  }

  void fill(int i, int j) {
    if (i == c_) {
      emit();
      return;
    }
    if (j == c_) {
      if (rem_[i] == 0) fill(i + 1, i + 1);
      return;
    }
    if (j == i) {
      int max_loops = rem_[i] / 2;
      if (same_kind(i)) max_loops = std::min(max_loops, adj_[i - 1][i - 1]);
      for (int loops = max_loops; loops >= 0; --loops) {
        rem_[i] -= 2 * loops;
        adj_[i][i] = loops;
        fill(i, j + 1);
        rem_[i] += 2 * loops;
      }
      adj_[i][i] = 0;
      return;
    }
    int later = 0;
    for (int k = j; k < c_; ++k) later += rem_[k];
    if (rem_[i] > later) return;
    const int hi = std::min(rem_[i], rem_[j]);
    const int lo = j + 1 == c_ ? rem_[i] : 0;
    for (int m = lo; m <= hi; ++m) {
      rem_[i] -= m;
      rem_[j] -= m;
      adj_[i][j] = adj_[j][i] = m;
      fill(i, j + 1);
      rem_[i] += m;
      rem_[j] += m;
    }
    adj_[i][j] = adj_[j][i] = 0;
  }

  void emit() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < c_; ++i) {
      for (int j = i; j < c_; ++j) {
        for (int k = 0; k < adj_[i][j]; ++k) edges.emplace_back(i, j);
      }
    }
    // Disconnected assignments are dropped only here, once complete.
    auto g = WeightedGraph::from_edges(weights_, edges);
    if (!g.is_connected()) return;
    auto canon = canonical_form(g);
    auto key = canonical_key(canon);
    out_.emplace(std::move(key), std::move(canon));
  }

  int c_;
  std::vector<int> weights_;
  std::vector<int> degrees_;
  std::vector<int> rem_;
  std::vector<std::vector<int>> adj_;
  ClassMap& out_;
};

void degree_sequences(const std::vector<int>& weights, const std::vector<int>& lower,
                      const std::vector<int>& upper, int remaining, std::vector<int>& degrees,
                      ClassMap& out) {
  const int v = static_cast<int>(degrees.size());
  const int c = static_cast<int>(weights.size());
  if (v == c) {
    if (remaining == 0) MatrixFiller(weights, degrees, out).run();
    return;
  }
  int min_rest = 0;
  int max_rest = 0;
  for (int k = v + 1; k < c; ++k) {
    min_rest += lower[k];
    max_rest += upper[k];
  }
  int hi = std::min(upper[v], remaining - min_rest);
  if (v > 0 && weights[v] == weights[v - 1]) hi = std::min(hi, degrees[v - 1]);
  for (int d = hi; d >= lower[v]; --d) {
    if (remaining - d > max_rest) break;
    degrees.push_back(d);
    degree_sequences(weights, lower, upper, remaining - d, degrees, out);
    degrees.pop_back();
  }
}

// Non-increasing weight vectors of length c summing to h.
void weight_vectors(int c, int h, int cap, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == c) {
    if (h == 0) out.push_back(current);
    return;
  }
  for (int w = std::min(cap, h); w >= 0; --w) {
    current.push_back(w);
    weight_vectors(c, h - w, w, current, out);
    current.pop_back();
  }
}

void enumerate_cell(int genus, int c, int h, ClassMap& out) {
  const int n = genus - 1 - h + c;
  const int dim = 3 * genus - 3 - n;
  if (n < 0 || dim < 0) return;
  std::vector<std::vector<int>> weight_options;
  std::vector<int> current;
  weight_vectors(c, h, h, current, weight_options);
  for (const auto& weights : weight_options) {
    std::vector<int> lower(c);
    std::vector<int> upper(c);
    bool feasible = true;
    for (int v = 0; v < c; ++v) {
      lower[v] = std::max(0, 3 - 3 * weights[v]);
      upper[v] = 3 + dim - 3 * weights[v];
      feasible &= upper[v] >= lower[v];
    }
    if (!feasible) continue;
    std::vector<int> degrees;
    degree_sequences(weights, lower, upper, 2 * n, degrees, out);
  }
}

void require_genus(int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2");
}

std::vector<CanonicalKey> keys_of(const std::vector<GraphClass>& classes) {
  std::vector<CanonicalKey> keys;
  keys.reserve(classes.size());
  for (const auto& cls : classes) keys.push_back(cls.key);
  return keys;
}

}  // namespace

bool EnumFilter::consistent_with(int genus) const {
  if (edges && components && total_weight) return genus == *total_weight + *edges - *components + 1;
  return true;
}

std::vector<GraphClass> enumerate_classes(int genus, const EnumFilter& filter) {
  require_genus(genus);
  std::vector<GraphClass> result;
  if (!filter.consistent_with(genus)) return result;
  ClassMap classes;
  for (int c = 1; c <= 2 * genus - 2; ++c) {
    if (filter.components && *filter.components != c) continue;
    for (int h = 0; h <= genus; ++h) {
      if (filter.total_weight && *filter.total_weight != h) continue;
      if (filter.edges && *filter.edges != genus - 1 - h + c) continue;
      enumerate_cell(genus, c, h, classes);
    }
  }
  result.reserve(classes.size());
  for (auto& [key, graph] : classes) result.push_back({key, std::move(graph)});
  return result;
}

std::vector<CanonicalKey> enumerate(int genus, const EnumFilter& filter) {
  return keys_of(enumerate_classes(genus, filter));
}

std::vector<GraphClass> enumerate_stratum_classes(int genus, int index) {
  require_genus(genus);
  if (index < 0 || index > 3 * genus - 3) throw PreconditionError("stratum index out of range");
  EnumFilter filter;
  filter.edges = 3 * genus - 3 - index;
  return enumerate_classes(genus, filter);
}

std::vector<CanonicalKey> enumerate_stratum(int genus, int index) {
  return keys_of(enumerate_stratum_classes(genus, index));
}

int GenusTable::total() const {
  int sum = 0;
  for (const auto& row : counts) sum = std::accumulate(row.begin(), row.end(), sum);
  return sum;
}

std::vector<int> GenusTable::row_major() const {
  std::vector<int> out;
  for (const auto& row : counts) {
    for (int h = genus; h >= 0; --h) out.push_back(row[h]);
  }
  return out;
}

GenusTable table(int genus) {
  require_genus(genus);
  GenusTable t;
  t.genus = genus;
  t.counts.assign(2 * genus - 2, std::vector<int>(genus + 1, 0));
  for (const auto& cls : enumerate_classes(genus)) {
    ++t.counts[cls.graph.vertex_count() - 1][cls.graph.total_weight()];
  }
  return t;
}

std::string format_table(const GenusTable& t) {
  std::ostringstream out;
  out << std::left << std::setw(6) << ("g=" + std::to_string(t.genus)) << std::right;
  for (int h = t.genus; h >= 0; --h) out << std::setw(6) << ("h=" + std::to_string(h));
  out << "\n";
  for (std::size_t c = 0; c < t.counts.size(); ++c) {
    out << std::left << std::setw(6) << ("c=" + std::to_string(c + 1)) << std::right;
    for (int h = t.genus; h >= 0; --h) out << std::setw(6) << t.counts[c][h];
    out << "\n";
  }
  out << "total " << t.total() << "\n";
  return out.str();
}

}  // namespace stablegraph
