#pragma once

#include <algorithm>
#include <cmath>

#include "vortexq/quadrature.hpp"

namespace vortexq {

/// Result of integrating with two unrelated schemes.
struct DualQuadrature {
  double value;        // composite Gauss-Legendre
  double alternate;    // adaptive Simpson
  double discrepancy;  // |value - alternate| / |value|
};

/// Integrates f over [a, b] with composite Gauss-Legendre panels (scheme A)
/// and adaptive Simpson (scheme B). Gauss-Legendre is driven three orders
/// below `tol`, Simpson one order below. The caller decides whether
/// `discrepancy` is acceptable.
template <class F>
DualQuadrature dual_quadrature(F&& f, double a, double b, double tol) {
  const double target = std::max(1e-3 * tol, 1e-14);
  const double gl = quad::integrate_gl_refined(f, a, b, target);
  const double scale = std::abs(gl) > 0.0 ? std::abs(gl) : 1.0;
  const double simpson = quad::adaptive_simpson(f, a, b, 0.1 * tol * scale);
  const double diff = std::abs(gl - simpson);
  return {gl, simpson, std::abs(gl) > 0.0 ? diff / std::abs(gl) : diff};
}

}  // namespace vortexq
