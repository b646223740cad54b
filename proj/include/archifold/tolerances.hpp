#pragma once

namespace archifold {

// Central tolerance constants. Exact (QuadExt/Rational) computations use none.
inline constexpr double kRootTol = 1e-12;   // polynomial root residuals
inline constexpr double kGeomTol = 1e-9;    // derived geometry (root-dependent)
inline constexpr double kMergeTol = 1e-9;   // vertex dedup distance
inline constexpr double kLineTol = 1e-12;   // point-on-line / parallelism checks

}  // namespace archifold
