#pragma once

#include <cstddef>
#include <vector>

#include "archifold/quadext.hpp"
#include "archifold/rational.hpp"

namespace archifold {

namespace detail {
inline bool coeff_is_zero(double c) { return c == 0.0; }
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const QuadExt& c) { return c.is_zero(); }
inline double same_field_int(double, int n) { return n; }
inline Rational same_field_int(const Rational&, int n) { return Rational(n); }
inline QuadExt same_field_int(const QuadExt& like, int n) { return QuadExt::of(Rational(n), like.disc()); }
}  // namespace detail

// Dense univariate polynomial, coefficients in ascending degree order.
// Trailing zero coefficients are trimmed so the leading coefficient of a
// nonzero polynomial is nonzero.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }

  T eval(const T& t) const {
    if (c_.empty()) return T(t - t);  // zero of the right type
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * detail::same_field_int(c_[i], static_cast<int>(i)));
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<T> out(x.c_.size() + y.c_.size() - 1, x.c_[0] - x.c_[0]);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] = out[i + j] + x.c_[i] * y.c_[j];
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

// Specialized eval overloads so exact polynomials can be used with plain
// scalar arguments.
inline double poly_eval(const Poly<double>& p, double t) { return p.eval(t); }
inline Rational poly_eval(const Poly<Rational>& p, const Rational& t) { return p.eval(t); }
inline QuadExt poly_eval(const Poly<QuadExt>& p, const QuadExt& t) { return p.eval(t); }

inline Poly<double> to_double_poly(const Poly<Rational>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.to_double());
  return Poly<double>(std::move(c));
}

inline Poly<double> to_double_poly(const Poly<QuadExt>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.to_double());
  return Poly<double>(std::move(c));
}

}  // namespace archifold
