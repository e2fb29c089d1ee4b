#pragma once

// One-dimensional quadrature used by the mode-power integral, the radial
// matrix elements and the dual-scheme oracle. Two deliberately unrelated
// families are provided: composite Gauss-Legendre (refined by panel doubling)
// and adaptive Simpson with Richardson correction.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "vortexq/errors.hpp"

namespace vortexq::quad {

/// Default node budget; exceeding it means the integrand or the tolerance is
/// wrong, not that more nodes would help.
inline constexpr std::size_t default_max_nodes = 1'000'000;

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule from Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre over `panels` equal sub-intervals of [a, b].
template <class F>
double integrate_gl_panels(F&& f, double a, double b, std::size_t panels,
                           const GaussLegendreRule& rule) {
  const double width = (b - a) / static_cast<double>(panels);
  const double half = 0.5 * width;
  double sum = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    sum += panel * half;
  }
  return sum;
}

/// Composite Gauss-Legendre, doubling the panel count until two successive
/// estimates agree to `rel_tol` (or `abs_tol`). Throws NumericalError when the
/// node budget runs out.
template <class F>
double integrate_gl_refined(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                            std::size_t order = 20,
                            std::size_t max_nodes = default_max_nodes) {
  const GaussLegendreRule rule = gauss_legendre(order);
  std::size_t panels = 4;
  double previous = integrate_gl_panels(f, a, b, panels, rule);
  while (true) {
    panels *= 2;
    if (panels * order > max_nodes) {
      throw NumericalError("Gauss-Legendre refinement did not converge within " +
                           std::to_string(max_nodes) + " nodes on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "]");
    }
    const double current = integrate_gl_panels(f, a, b, panels, rule);
    const double diff = std::abs(current - previous);
    if (diff <= rel_tol * std::abs(current) || diff <= abs_tol) {
      return current;
    }
    previous = current;
  }
}

namespace detail {

template <class F>
double simpson_step(F& f, double a, double fa, double m, double fm, double b, double fb,
                    double whole, double tol, int depth, std::size_t& evals,
                    std::size_t max_nodes) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  if (evals > max_nodes) {
    throw NumericalError("adaptive Simpson exceeded " + std::to_string(max_nodes) + " nodes");
  }
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, evals, max_nodes) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1, evals, max_nodes);
}

}  // namespace detail

/// Adaptive Simpson to absolute tolerance `abs_tol`. The interval is first
/// split into `initial_panels` so that oscillatory integrands cannot fool the
/// first error estimate.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol,
                        std::size_t initial_panels = 64,
                        std::size_t max_nodes = default_max_nodes) {
  std::size_t evals = 0;
  const double width = (b - a) / static_cast<double>(initial_panels);
  const double panel_tol = abs_tol / static_cast<double>(initial_panels);
  double sum = 0.0;
  double x0 = a;
  double f0 = f(x0);
  ++evals;
  for (std::size_t k = 0; k < initial_panels; ++k) {
    const double x2 = (k + 1 == initial_panels) ? b : a + static_cast<double>(k + 1) * width;
    const double x1 = 0.5 * (x0 + x2);
    const double f1 = f(x1);
    const double f2 = f(x2);
    evals += 2;
    const double whole = (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
    sum += detail::simpson_step(f, x0, f0, x1, f1, x2, f2, whole, panel_tol, 50, evals,
                                max_nodes);
    x0 = x2;
    f0 = f2;
  }
  return sum;
}

}  // namespace vortexq::quad
