#pragma once

#include <vector>

#include "archifold/poly.hpp"

namespace archifold {

struct CubicRoots {
  struct Root {
    double value = 0.0;
    int multiplicity = 1;
  };
  std::vector<Root> roots;  // distinct real roots, ascending
  bool unique_real = false; // exactly one distinct real root

  int total_multiplicity() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
  }
};

// All real roots of a degree-3 polynomial. One real root goes through
// Cardano's radicals, three through the trigonometric form; every root is
// then Newton-polished against the max-|coefficient|-scaled polynomial to
// residual below kRootTol. Throws NotCubic unless degree() == 3.
CubicRoots solve_cubic(const Poly<double>& p);

// Newton refinement of a near-root, with residual measured on the scaled
// polynomial. Shared with callers that build their own low-degree solves.
double polish_root(const Poly<double>& p, double x0);

}  // namespace archifold
