#include <doctest.h>

#include <algorithm>

#include "stablegraph/perm_group.hpp"

using namespace stablegraph;

TEST_CASE("permutation basics") {
  const Permutation a{1, 0, 2};
  const Permutation b{0, 2, 1};
  CHECK(compose(a, b) == Permutation{1, 2, 0});
  CHECK(compose(b, a) == Permutation{2, 0, 1});
  CHECK(compose(a, inverse(a)) == identity_permutation(3));
  CHECK(inverse(Permutation{1, 2, 0}) == Permutation{2, 0, 1});
  CHECK(is_identity(identity_permutation(4)));
  CHECK_FALSE(is_identity(a));
}

TEST_CASE("cycle notation") {
  CHECK(cycle_string(identity_permutation(3)) == "()");
  CHECK(cycle_string(Permutation{1, 0, 3, 2}) == "(1 2)(3 4)");
  CHECK(cycle_string(Permutation{1, 2, 0}) == "(1 2 3)");
}

TEST_CASE("closure of generators") {
  const PermGroup trivial(3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements().front() == identity_permutation(3));

  const PermGroup s3(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  for (const auto& x : s3.elements()) {
    CHECK(s3.contains(inverse(x)));
    for (const auto& y : s3.elements()) CHECK(s3.contains(compose(x, y)));
  }

  const PermGroup s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.order() == 24);
  const PermGroup c4(4, {{1, 2, 3, 0}});
  CHECK(c4.order() == 4);
  CHECK_FALSE(c4.contains({1, 0, 2, 3}));
}

TEST_CASE("orbit partitions") {
  CHECK(orbits(PermGroup(3)) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(orbits(PermGroup(3, {{1, 0, 2}})) == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(orbits(5, {{0, 2, 1, 4, 3}}) == std::vector<std::vector<int>>{{0}, {1, 2}, {3, 4}});
  CHECK(orbits(PermGroup(4, {{1, 2, 3, 0}})).size() == 1);
}
