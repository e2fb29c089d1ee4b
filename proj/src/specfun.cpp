#include "vortexq/specfun.hpp"

#include <cmath>
#include <string>

#include "vortexq/errors.hpp"

namespace vortexq {

void HydrogenicState::validate() const {
  if (n < 1 || L < 0 || L > n - 1) {
    throw DomainError("hydrogenic state requires 0 <= L <= n-1 (n=" + std::to_string(n) +
                      ", L=" + std::to_string(L) + ")");
  }
  if (!(Z > 0.0)) {
    throw DomainError("effective nuclear charge must be positive");
  }
}

double assoc_laguerre(LaguerreParams params, double x) {
  const double a = params.a;
  double prev = 1.0;
  if (params.p == 0) {
    return prev;
  }
  double curr = 1.0 + a - x;
  for (unsigned k = 1; k < params.p; ++k) {
    const double kd = k;
    const double next = ((2.0 * kd + 1.0 + a - x) * curr - (kd + a) * prev) / (kd + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double assoc_laguerre_deriv(LaguerreParams params, double x) {
  if (params.p == 0) {
    return 0.0;
  }
  return -assoc_laguerre({params.p - 1, params.a + 1}, x);
}

double log_factorial_ratio(unsigned p, unsigned ell_abs) {
  return std::lgamma(static_cast<double>(p) + 1.0) -
         std::lgamma(static_cast<double>(p) + static_cast<double>(ell_abs) + 1.0);
}

double hydrogenic_radial(const HydrogenicState& state, double r) {
  state.validate();
  const int n = state.n;
  const int L = state.L;
  const double nd = n;
  // N^2 = (2Z/n)^3 (n-L-1)! / (2n (n+L)!)
  const double log_norm =
      0.5 * (3.0 * std::log(2.0 * state.Z / nd) + std::lgamma(nd - L) -
             std::log(2.0 * nd) - std::lgamma(nd + L + 1.0));
  const double x = 2.0 * state.Z * r / nd;
  const double poly = assoc_laguerre({static_cast<unsigned>(n - L - 1),
                                      static_cast<unsigned>(2 * L + 1)},
                                     x);
  return std::exp(log_norm - 0.5 * x) * std::pow(x, L) * poly;
}

double hydrogenic_cutoff(const HydrogenicState& state) {
  return 40.0 * state.n * state.n / state.Z;
}

}  // namespace vortexq
