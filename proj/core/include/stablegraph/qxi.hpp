#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace stablegraph {

using Rational = boost::rational<std::int64_t>;

// Element p + q*xi of Q(xi), where xi^2 = xi - 1 (so xi^3 = -1, xi != -1).
class QXi {
 public:
  QXi() = default;
  QXi(Rational p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  QXi(std::int64_t p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  QXi(Rational p, Rational q) : p_(p), q_(q) {}

  static QXi xi() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& xi_part() const { return q_; }
  bool is_zero() const { return p_.numerator() == 0 && q_.numerator() == 0; }
  bool is_rational() const { return q_.numerator() == 0; }

  // Galois conjugate: xi -> 1 - xi.
  QXi conjugate() const { return {p_ + q_, -q_}; }
  // x * conjugate(x) = p^2 + pq + q^2.
  Rational norm() const { return p_ * p_ + p_ * q_ + q_ * q_; }

  QXi operator-() const { return {-p_, -q_}; }
  friend QXi operator+(const QXi& a, const QXi& b) { return {a.p_ + b.p_, a.q_ + b.q_}; }
  friend QXi operator-(const QXi& a, const QXi& b) { return {a.p_ - b.p_, a.q_ - b.q_}; }
  friend QXi operator*(const QXi& a, const QXi& b) {
    return {a.p_ * b.p_ - a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_ + a.q_ * b.q_};
  }
  // Throws PreconditionError on division by zero.
  friend QXi operator/(const QXi& a, const QXi& b);
  friend bool operator==(const QXi& a, const QXi& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  // Arbitrary total order, for containers.
  friend bool operator<(const QXi& a, const QXi& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.q_ < b.q_;
  }

 private:
  Rational p_{0};
  Rational q_{0};
};

// Square root inside Q(xi) when one exists.
std::optional<Rational> rational_sqrt(const Rational& r);
std::optional<QXi> sqrt(const QXi& x);

// "n", "n/d", "a/b+c/d*x", "c/d*x"; "x" stands for xi and a unit coefficient is dropped.
std::string to_string(const Rational& r);
std::string to_string(const QXi& x);
QXi parse_qxi(std::string_view text);

}  // namespace stablegraph
