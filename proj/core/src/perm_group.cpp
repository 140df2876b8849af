#include "stablegraph/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stablegraph/error.hpp"

namespace stablegraph {

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j + 1);
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree_) throw InternalError("generator degree mismatch");
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_permutation(degree_)) throw InternalError("generator is not a permutation");
  }
  std::set<Permutation> seen{identity_permutation(degree_)};
  std::vector<Permutation> frontier{identity_permutation(degree_)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<int>> orbits(int set_size, const std::vector<Permutation>& action) {
  std::vector<int> parent(set_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : action) {
    for (int i = 0; i < set_size; ++i) {
      const int a = find(i);
      const int b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(set_size, -1);
  for (int i = 0; i < set_size; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& group) {
  return orbits(group.degree(), group.generators());
}

}  // namespace stablegraph
