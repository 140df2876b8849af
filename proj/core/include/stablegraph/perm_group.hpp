#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stablegraph {

// p[i] is the image of point i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
// (a * b)(i) = a(b(i)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
// Cycle notation with 1-based points, fixed points omitted; "()" for identity.
std::string cycle_string(const Permutation& p);

// Finite permutation group given by generators. The full element list is
// built at construction by closure; the groups handled here have at most a
// few tens of thousands of elements.
class PermGroup {
 public:
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  // Sorted, identity first.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Orbit partition of {0..degree-1}; each orbit sorted, orbits ordered by
// their least point.
std::vector<std::vector<int>> orbits(const PermGroup& group);

// Orbits of the permutations in `action` acting on {0..set_size-1}.
std::vector<std::vector<int>> orbits(int set_size, const std::vector<Permutation>& action);

}  // namespace stablegraph
