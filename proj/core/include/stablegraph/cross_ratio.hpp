#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stablegraph/perm_group.hpp"
#include "stablegraph/qxi.hpp"
#include "stablegraph/symmetry.hpp"

namespace stablegraph {

// Point (num : den) of the projective line over Q(xi), kept normalised as
// (x : 1) or (1 : 0).
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(QXi value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ProjPoint(std::int64_t value) : num_(value), den_(1) {}    // NOLINT(google-explicit-constructor)
  // Throws PreconditionError for (0 : 0).
  ProjPoint(const QXi& num, const QXi& den);

  static ProjPoint infinity() { return ProjPoint(QXi(1), QXi(0)); }

  bool is_infinity() const { return den_.is_zero(); }
  const QXi& num() const { return num_; }
  const QXi& den() const { return den_; }
  // Affine coordinate; requires a finite point.
  const QXi& value() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Finite points by QXi order, infinity last.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  QXi num_{0};
  QXi den_{1};
};

std::string to_string(const ProjPoint& p);
// "inf", "p/q", or "a/b+c/d*x".
ProjPoint parse_point(std::string_view text);

// ((x4 - x1)(x2 - x3)) / ((x4 - x3)(x2 - x1)), so cr(0, 1, inf, l) = l.
ProjPoint cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3,
                      const ProjPoint& x4);

// z -> (a z + b) / (c z + d).
struct MobiusMap {
  QXi a, b, c, d;
  ProjPoint operator()(const ProjPoint& z) const;
};
MobiusMap compose(const MobiusMap& f, const MobiusMap& g);

// Permutation of the marked points (0, 1, inf): position i receives marked
// point s[i].
using S3Elem = std::array<int, 3>;

// All six elements, identity first.
std::vector<S3Elem> s3_elements();
bool is_identity(const S3Elem& s);
// l -> cr(P[s0], P[s1], P[s2], l) with P = (0, 1, inf).
MobiusMap mobius_of(const S3Elem& s);
ProjPoint cr_action(const S3Elem& s, const ProjPoint& lambda);
// The element acting as s after t.
S3Elem s3_compose(const S3Elem& s, const S3Elem& t);
std::string to_string(const S3Elem& s);

// Image of an element of S4 acting on the four marked points of the
// parameter line, as an element of S3 ~ S4/V4.
S3Elem s3_from_s4(const Permutation& s4);

class S3Subgroup {
 public:
  // Throws PreconditionError when the elements are not closed under
  // composition or lack the identity.
  explicit S3Subgroup(std::vector<S3Elem> elements);

  static S3Subgroup generated_by(const std::vector<S3Elem>& gens);
  // Fixed representative of each conjugacy class.
  static S3Subgroup of_type(S3Type type);

  const std::vector<S3Elem>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  S3Type type() const { return s3_type_from_order(order()); }

 private:
  std::vector<S3Elem> elements_;
};

// Sorted and deduplicated.
std::vector<ProjPoint> orbit(const S3Subgroup& group, const ProjPoint& lambda);
int stabilizer_order(const S3Subgroup& group, const ProjPoint& lambda);
// Throws PreconditionError for the identity.
std::vector<ProjPoint> fixed_points(const S3Elem& s);
bool same_point(const S3Subgroup& group, const ProjPoint& lambda, const ProjPoint& mu);

// [a | b]: stabilizer orders of the orbits of {0, 1, inf} and of the other
// points with nontrivial stabilizer, each sorted ascending.
struct Signature {
  std::vector<int> closure;
  std::vector<int> interior;

  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& s);
Signature parse_signature(std::string_view text);
Signature orbifold_signature(const S3Subgroup& group);

}  // namespace stablegraph
