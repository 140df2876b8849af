#include <doctest.h>

#include "stablegraph/error.hpp"
#include "stablegraph/qxi.hpp"

using namespace stablegraph;

namespace {

QXi q(std::int64_t p, std::int64_t q = 0) { return {Rational(p), Rational(q)}; }

}  // namespace

TEST_CASE("xi satisfies its minimal polynomial") {
  const QXi xi = QXi::xi();
  CHECK(xi * xi == xi - QXi(1));
  CHECK(xi * xi * xi == QXi(-1));
  CHECK(xi != QXi(-1));
  CHECK(xi * xi.conjugate() == QXi(1));
  CHECK(xi.conjugate() == QXi(1) - xi);
  CHECK(xi.norm() == Rational(1));
}

TEST_CASE("field arithmetic") {
  const QXi a = q(2, 3);
  const QXi b{Rational(-1, 2), Rational(5, 7)};
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a * b) / b == a);
  CHECK(a / a == QXi(1));
  CHECK(a * (b + QXi(1)) == a * b + a);
  CHECK(-a + a == QXi(0));
  CHECK(a.norm() == Rational(4 + 6 + 9));
  CHECK((a * a.conjugate()).is_rational());
  CHECK_THROWS_AS(a / QXi(0), PreconditionError);
}

TEST_CASE("square roots") {
  CHECK(sqrt(QXi(4)) == QXi(2));
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)));
  CHECK_FALSE(rational_sqrt(Rational(-1)));
  // -3 = (2 xi - 1)^2
  const auto r = sqrt(QXi(-3));
  REQUIRE(r);
  CHECK(*r * *r == QXi(-3));
  const QXi x = q(3, -1) * q(3, -1);
  const auto rx = sqrt(x);
  REQUIRE(rx);
  CHECK(*rx * *rx == x);
  CHECK_FALSE(sqrt(QXi(2)));
  CHECK_FALSE(sqrt(QXi::xi() + QXi(1)));
}

TEST_CASE("text form") {
  CHECK(to_string(QXi(3)) == "3");
  CHECK(to_string(QXi(Rational(-1, 2))) == "-1/2");
  CHECK(to_string(QXi::xi()) == "x");
  CHECK(to_string(QXi(1) - QXi::xi()) == "1-x");
  CHECK(to_string(QXi{Rational(1, 2), Rational(-3, 4)}) == "1/2-3/4*x");
  CHECK(to_string(q(0, -1)) == "-x");
  for (const auto& v : {QXi(3), QXi::xi(), QXi(1) - QXi::xi(), QXi{Rational(1, 2), Rational(-3, 4)},
                        q(0, -1), q(-2, 5), QXi{Rational(0), Rational(2, 3)}}) {
    CHECK(parse_qxi(to_string(v)) == v);
  }
  CHECK(parse_qxi("2/3*x") == QXi{Rational(0), Rational(2, 3)});
  CHECK(parse_qxi("1+x") == q(1, 1));
  CHECK_THROWS_AS(parse_qxi(""), ParseError);
  CHECK_THROWS_AS(parse_qxi("1/0"), ParseError);
  CHECK_THROWS_AS(parse_qxi("x2"), ParseError);
  CHECK_THROWS_AS(parse_qxi("abc"), ParseError);
}
