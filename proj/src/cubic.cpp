#include "archifold/cubic.hpp"

#include <algorithm>
#include <cmath>

#include "archifold/errors.hpp"
#include "archifold/tolerances.hpp"

namespace archifold {

namespace {

double max_abs_coeff(const Poly<double>& p) {
  double m = 0.0;
  for (double c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double polish_root(const Poly<double>& p, double x0) {
  const Poly<double> dp = p.derivative();
  const double scale = max_abs_coeff(p);
  double x = x0;
  double fx = p.eval(x);
  for (int it = 0; it < 60; ++it) {
    if (std::abs(fx) <= 1e-17 * scale) break;
    double dfx = dp.eval(x);
    if (dfx == 0.0) break;
    double xn = x - fx / dfx;
    double fxn = p.eval(xn);
    if (!std::isfinite(xn) || std::abs(fxn) >= std::abs(fx)) break;
    x = xn;
    fx = fxn;
  }
  return x;
}

CubicRoots solve_cubic(const Poly<double>& p) {
  if (p.degree() != 3) throw NotCubic("solve_cubic requires a degree-3 polynomial");
  const double a = p[3], b = p[2], c = p[1], d = p[0];

  // depressed form t^3 + pt + q with x = t - b/(3a)
  const double shift = b / (3.0 * a);
  const double pp = (3.0 * a * c - b * b) / (3.0 * a * a);
  const double qq = (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
  const double disc = -(4.0 * pp * pp * pp + 27.0 * qq * qq);

  // classification tolerance relative to the depressed coefficients
  const double dscale = std::max({std::abs(pp) * std::abs(pp) * std::abs(pp),
                                  std::abs(qq) * std::abs(qq), 1e-300});
  const double eps = 1e-12 * dscale;

  CubicRoots out;
  auto push = [&](double t, int mult) {
    out.roots.push_back({polish_root(p, t - shift), mult});
  };

  if (disc > eps) {
    // three distinct real roots (trigonometric form)
    const double m = 2.0 * std::sqrt(-pp / 3.0);
    const double arg = std::clamp(3.0 * qq / (pp * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) push(m * std::cos(theta - 2.0 * kPi * k / 3.0), 1);
  } else if (disc < -eps) {
    // one real root (Cardano)
    const double s = std::sqrt(qq * qq / 4.0 + pp * pp * pp / 27.0);
    const double u = std::cbrt(-qq / 2.0 + s);
    const double v = std::cbrt(-qq / 2.0 - s);
    push(u + v, 1);
  } else {
    // boundary: repeated roots
    if (std::abs(pp) <= 1e-10 * std::cbrt(dscale)) {
      push(0.0, 3);
    } else {
      push(3.0 * qq / pp, 1);           // simple root
      push(-3.0 * qq / (2.0 * pp), 2);  // double root
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.value < y.value; });
  out.unique_real = out.roots.size() == 1;
  return out;
}

}  // namespace archifold
