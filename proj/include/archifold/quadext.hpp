#pragma once

#include <cmath>
#include <string>

#include "archifold/errors.hpp"
#include "archifold/rational.hpp"

namespace archifold {

// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), D in {2, 5}.
// All arithmetic is exact; mixing different D throws MismatchedField.
class QuadExt {
 public:
  QuadExt() = default;  // zero of Q(sqrt 5)
  QuadExt(Rational a, Rational b, int disc) : a_(std::move(a)), b_(std::move(b)), d_(disc) {
    if (disc != 2 && disc != 5) throw MismatchedField("discriminant must be 2 or 5");
  }
  static QuadExt of(Rational a, int disc) { return QuadExt(std::move(a), 0, disc); }
  static QuadExt sqrt_of(int disc) { return QuadExt(0, 1, disc); }
  // golden ratio (1 + sqrt(5)) / 2
  static QuadExt golden() { return QuadExt(Rational(1, 2), Rational(1, 2), 5); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int disc() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  // field norm a^2 - D b^2; zero only for the zero element
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return QuadExt(x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_,
                   x.a_ * y.b_ + x.b_ * y.a_, x.d_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    if (y.is_zero()) throw DivisionByZero("quadratic-field division by zero");
    Rational n = y.norm();
    QuadExt num = x * y.conj();
    return QuadExt(num.a_ / n, num.b_ / n, x.d_);
  }

  friend QuadExt operator+(const QuadExt& x, const Rational& r) { return x + of(r, x.d_); }
  friend QuadExt operator-(const QuadExt& x, const Rational& r) { return x - of(r, x.d_); }
  friend QuadExt operator*(const QuadExt& x, const Rational& r) { return QuadExt(x.a_ * r, x.b_ * r, x.d_); }
  friend QuadExt operator/(const QuadExt& x, const Rational& r) {
    if (r.is_zero()) throw DivisionByZero("quadratic-field division by zero");
    return QuadExt(x.a_ / r, x.b_ / r, x.d_);
  }
  friend QuadExt operator*(const Rational& r, const QuadExt& x) { return x * r; }
  friend QuadExt operator+(const Rational& r, const QuadExt& x) { return x + r; }
  friend QuadExt operator-(const Rational& r, const QuadExt& x) { return of(r, x.d_) - x; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Exact sign of the real value a + b*sqrt(D).
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against D b^2
    int c = (a_ * a_ <=> Rational(d_) * b_ * b_) == std::strong_ordering::greater ? 1
            : (a_ * a_ == Rational(d_) * b_ * b_ ? 0 : -1);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }

  // Sign-faithful conversion: routes through the conjugate when a and b
  // cancel, so the double image never crosses zero spuriously.
  double to_double() const {
    double root = std::sqrt(static_cast<double>(d_));
    if (a_.sign() * b_.sign() >= 0) return a_.to_double() + b_.to_double() * root;
    double denom = a_.to_double() - b_.to_double() * root;
    return norm().to_double() / denom;
  }

  std::string str() const {
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") +
           (b_.sign() < 0 ? (-b_).str() : b_.str()) + "*sqrt(" + std::to_string(d_) + ")";
  }

 private:
  void check(const QuadExt& o) const {
    if (d_ != o.d_) throw MismatchedField("operands lie in different quadratic fields");
  }
  Rational a_, b_;
  int d_ = 5;
};

}  // namespace archifold
