#include "stablegraph/cross_ratio.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

// det((a1 : a2), (b1 : b2)) = a1 b2 - a2 b1, the homogeneous "a - b".
QXi det(const ProjPoint& a, const ProjPoint& b) { return a.num() * b.den() - a.den() * b.num(); }

const std::array<ProjPoint, 3>& marked_points() {
  static const std::array<ProjPoint, 3> points{ProjPoint(0), ProjPoint(1), ProjPoint::infinity()};
  return points;
}

// Has a six-point orbit under S3, so it separates the six maps.
const ProjPoint& probe() {
  static const ProjPoint p(3);
  return p;
}

S3Elem identify(const ProjPoint& image_of_probe) {
  for (const auto& s : s3_elements()) {
    if (cr_action(s, probe()) == image_of_probe) return s;
  }
  throw InternalError("value " + to_string(image_of_probe) + " is not in the orbit of 3");
}

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  if (text.empty() || text == "\xE2\x88\x85") return out;  // U+2205 empty set
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto part = text.substr(start, end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("bad signature '" + std::string(whole) + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace

ProjPoint::ProjPoint(const QXi& num, const QXi& den) {
  if (num.is_zero() && den.is_zero()) throw PreconditionError("(0 : 0) is not a point");
  if (den.is_zero()) {
    num_ = QXi(1);
    den_ = QXi(0);
  } else {
    num_ = num / den;
    den_ = QXi(1);
  }
}

const QXi& ProjPoint::value() const {
  if (is_infinity()) throw PreconditionError("infinity has no affine coordinate");
  return num_;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return a.num_ < b.num_;
}

std::string to_string(const ProjPoint& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

ProjPoint parse_point(std::string_view text) {
  if (text == "inf" || text == "infinity") return ProjPoint::infinity();
  return ProjPoint(parse_qxi(text));
}

ProjPoint cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3,
                      const ProjPoint& x4) {
  return ProjPoint(det(x4, x1) * det(x2, x3), det(x4, x3) * det(x2, x1));
}

ProjPoint MobiusMap::operator()(const ProjPoint& z) const {
  return ProjPoint(a * z.num() + b * z.den(), c * z.num() + d * z.den());
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
          f.c * g.b + f.d * g.d};
}

std::vector<S3Elem> s3_elements() {
  return {S3Elem{0, 1, 2}, S3Elem{1, 0, 2}, S3Elem{2, 1, 0},
          S3Elem{0, 2, 1}, S3Elem{1, 2, 0}, S3Elem{2, 0, 1}};
}

bool is_identity(const S3Elem& s) { return s == S3Elem{0, 1, 2}; }

MobiusMap mobius_of(const S3Elem& s) {
  const auto& pts = marked_points();
  const ProjPoint& a = pts[s[0]];
  const ProjPoint& b = pts[s[1]];
  const ProjPoint& c = pts[s[2]];
  // cr(A, B, C, z) = det(z, A) det(B, C) / (det(z, C) det(B, A)), linear in z.
  const QXi k1 = det(b, c);
  const QXi k2 = det(b, a);
  return {k1 * a.den(), -(k1 * a.num()), k2 * c.den(), -(k2 * c.num())};
}

ProjPoint cr_action(const S3Elem& s, const ProjPoint& lambda) { return mobius_of(s)(lambda); }

S3Elem s3_compose(const S3Elem& s, const S3Elem& t) { return identify(cr_action(s, cr_action(t, probe()))); }

std::string to_string(const S3Elem& s) {
  return "[" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "]";
}

S3Elem s3_from_s4(const Permutation& s4) {
  if (s4.size() != 4) throw PreconditionError("expected a permutation of four points");
  const auto& pts = marked_points();
  const std::array<ProjPoint, 4> x{pts[0], pts[1], pts[2], probe()};
  std::array<ProjPoint, 4> y;
  for (int i = 0; i < 4; ++i) y[s4[i]] = x[i];
  return identify(cross_ratio(y[0], y[1], y[2], y[3]));
}

S3Subgroup::S3Subgroup(std::vector<S3Elem> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || !is_identity(elements_.front())) {
    throw PreconditionError("subgroup must contain the identity");
  }
  for (const auto& s : elements_) {
    for (const auto& t : elements_) {
      if (!std::binary_search(elements_.begin(), elements_.end(), s3_compose(s, t))) {
        throw PreconditionError("elements are not closed under composition");
      }
    }
  }
}

S3Subgroup S3Subgroup::generated_by(const std::vector<S3Elem>& gens) {
  std::set<S3Elem> seen{S3Elem{0, 1, 2}};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<S3Elem> current(seen.begin(), seen.end());
    for (const auto& x : current) {
      for (const auto& g : gens) grew |= seen.insert(s3_compose(g, x)).second;
    }
  }
  return S3Subgroup({seen.begin(), seen.end()});
}

S3Subgroup S3Subgroup::of_type(S3Type type) {
  switch (type) {
    case S3Type::Trivial: return generated_by({});
    case S3Type::C2: return generated_by({S3Elem{1, 0, 2}});
    case S3Type::C3: return generated_by({S3Elem{1, 2, 0}});
    case S3Type::Full: return generated_by({S3Elem{1, 0, 2}, S3Elem{1, 2, 0}});
  }
  throw InternalError("unknown S3 type");
}

std::vector<ProjPoint> orbit(const S3Subgroup& group, const ProjPoint& lambda) {
  std::vector<ProjPoint> out;
  for (const auto& s : group.elements()) out.push_back(cr_action(s, lambda));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int stabilizer_order(const S3Subgroup& group, const ProjPoint& lambda) {
  int count = 0;
  for (const auto& s : group.elements()) count += cr_action(s, lambda) == lambda ? 1 : 0;
  return count;
}

std::vector<ProjPoint> fixed_points(const S3Elem& s) {
  if (is_identity(s)) throw PreconditionError("every point is fixed by the identity");
  const MobiusMap m = mobius_of(s);
  // (z1 : z2) is fixed iff -c z1^2 + (a - d) z1 z2 + b z2^2 = 0.
  std::vector<ProjPoint> out;
  if (m.c.is_zero()) {
    out.push_back(ProjPoint::infinity());
    const QXi slope = m.a - m.d;
    if (!slope.is_zero()) out.emplace_back(-m.b / slope);
  } else {
    // c z^2 + (d - a) z - b = 0
    const QXi p = m.d - m.a;
    const QXi disc = p * p + QXi(4) * m.c * m.b;
    if (auto root = sqrt(disc)) {
      const QXi two_c = QXi(2) * m.c;
      out.emplace_back((-p + *root) / two_c);
      out.emplace_back((-p - *root) / two_c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_point(const S3Subgroup& group, const ProjPoint& lambda, const ProjPoint& mu) {
  const auto o = orbit(group, lambda);
  return std::binary_search(o.begin(), o.end(), mu);
}

std::string to_string(const Signature& s) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(v[i]);
    }
    return out;
  };
  return "[" + join(s.closure) + "|" + (s.interior.empty() ? "\xE2\x88\x85" : join(s.interior)) + "]";
}

Signature parse_signature(std::string_view text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
    throw ParseError("bad signature '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string_view::npos) throw ParseError("bad signature '" + std::string(text) + "'");
  return {parse_int_list(body.substr(0, bar), text), parse_int_list(body.substr(bar + 1), text)};
}

Signature orbifold_signature(const S3Subgroup& group) {
  Signature sig;
  std::set<ProjPoint> done;
  for (const auto& p : marked_points()) {
    if (done.count(p)) continue;
    for (const auto& q : orbit(group, p)) done.insert(q);
    sig.closure.push_back(stabilizer_order(group, p));
  }
  std::set<ProjPoint> special;
  for (const auto& s : group.elements()) {
    if (is_identity(s)) continue;
    for (const auto& p : fixed_points(s)) {
      if (!done.count(p)) special.insert(p);
    }
  }
  for (const auto& p : special) {
    if (done.count(p)) continue;
    for (const auto& q : orbit(group, p)) done.insert(q);
    sig.interior.push_back(stabilizer_order(group, p));
  }
  std::sort(sig.closure.begin(), sig.closure.end());
  std::sort(sig.interior.begin(), sig.interior.end());
  return sig;
}

}  // namespace stablegraph
