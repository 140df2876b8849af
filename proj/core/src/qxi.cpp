#include "stablegraph/qxi.hpp"

#include <charconv>
#include <cmath>

#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

std::optional<std::int64_t> integer_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

Rational parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&]() -> ParseError {
    return ParseError("cannot parse number '" + std::string(whole) + "'");
  };
  if (s.empty()) throw fail();
  const auto slash = s.find('/');
  auto to_i64 = [&](std::string_view part) {
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) throw fail();
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_i64(s));
  const auto den = to_i64(s.substr(slash + 1));
  if (den == 0) throw fail();
  return Rational(to_i64(s.substr(0, slash)), den);
}

}  // namespace

QXi operator/(const QXi& a, const QXi& b) {
  if (b.is_zero()) throw PreconditionError("division by zero in Q(xi)");
  const Rational n = b.norm();
  const QXi num = a * b.conjugate();
  return {num.rational_part() / n, num.xi_part() / n};
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const auto n = integer_sqrt(r.numerator());
  const auto d = integer_sqrt(r.denominator());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<QXi> sqrt(const QXi& x) {
  // Work in the basis (1, s) with s = sqrt(-3) = 2 xi - 1:
  // x = a + b s with a = p + q/2, b = q/2.
  const Rational a = x.rational_part() + x.xi_part() / 2;
  const Rational b = x.xi_part() / 2;
  auto from_basis = [](const Rational& u, const Rational& v) {
    // u + v s = (u - v) + 2 v xi
    return QXi(u - v, 2 * v);
  };
  if (b.numerator() == 0) {
    if (auto r = rational_sqrt(a)) return from_basis(*r, 0);
    if (auto r = rational_sqrt(-a / 3)) return from_basis(0, *r);
    return std::nullopt;
  }
  // (u + v s)^2 = u^2 - 3 v^2 + 2 u v s, hence u^2 = (a + sqrt(a^2 + 3 b^2)) / 2.
  const auto root = rational_sqrt(a * a + 3 * b * b);
  if (!root) return std::nullopt;
  const auto u = rational_sqrt((a + *root) / 2);
  if (!u || u->numerator() == 0) return std::nullopt;
  const Rational v = b / (2 * *u);
  return from_basis(*u, v);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const QXi& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const Rational q = x.xi_part();
  auto term = [](const Rational& c) { return c == Rational(1) ? std::string("x") : to_string(c) + "*x"; };
  if (x.rational_part().numerator() == 0) return q == Rational(-1) ? "-x" : term(q);
  return to_string(x.rational_part()) + (q < 0 ? "-" : "+") + term(q < 0 ? -q : q);
}

QXi parse_qxi(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  const auto xpos = text.find('x');
  if (xpos == std::string_view::npos) return QXi(parse_rational(text, text));
  if (xpos + 1 != text.size()) throw ParseError("cannot parse number '" + std::string(text) + "'");
  auto body = text.substr(0, xpos);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  auto coefficient = [&](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s, text);
  };
  if (split == std::string_view::npos) return {Rational(0), coefficient(body)};
  return {parse_rational(body.substr(0, split), text), coefficient(body.substr(split))};
}

}  // namespace stablegraph
