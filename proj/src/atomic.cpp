#include "vortexq/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "vortexq/constants.hpp"
#include "vortexq/dual_quadrature.hpp"
#include "vortexq/errors.hpp"
#include "vortexq/quadrature.hpp"
#include "vortexq/specfun.hpp"

namespace vortexq {
namespace {

constexpr std::size_t polar_nodes = 64;
constexpr std::size_t azimuthal_nodes = 128;
constexpr double radial_tolerance = 1e-8;

// P_l^m(x) for m >= 0, including the (-1)^m Condon-Shortley phase.
double assoc_legendre(int l, int m, double x) {
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double odd = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -odd * s;
      odd += 2.0;
    }
  }
  if (l == m) {
    return pmm;
  }
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) {
    return pm1;
  }
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

double unit_component(Axis a, double sin_t, double cos_t, double phi) {
  switch (a) {
    case Axis::X:
      return sin_t * std::cos(phi);
    case Axis::Y:
      return sin_t * std::sin(phi);
    case Axis::Z:
      return cos_t;
  }
  return 0.0;
}

HydrogenicState hydrogenic(const AtomicLevel& level, double z_eff) {
  return {level.n, level.L, z_eff};
}

}  // namespace

void AtomicLevel::validate() const {
  if (n < 1 || L < 0 || L > n - 1 || std::abs(m) > L) {
    throw DomainError("atomic level requires |m| <= L <= n-1 (n=" + std::to_string(n) +
                      ", L=" + std::to_string(L) + ", m=" + std::to_string(m) + ")");
  }
}

char axis_name(Axis a) noexcept {
  switch (a) {
    case Axis::X:
      return 'x';
    case Axis::Y:
      return 'y';
    case Axis::Z:
      return 'z';
  }
  return '?';
}

double QuadrupoleTensor::max_abs() const noexcept {
  double best = 0.0;
  for (const complex& q : q_) {
    best = std::max(best, std::abs(q));
  }
  return best;
}

void TransitionLine::validate() const {
  if (!(omega_a > 0.0) || !std::isfinite(omega_a)) {
    throw ConfigError("transition frequency must be positive");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("linewidth gamma must be positive");
  }
  lower.validate();
  upper.validate();
}

TransitionLine cesium_6s_5d(double wavelength, double gamma, int m_upper) {
  if (!(wavelength > 0.0)) {
    throw ConfigError("wavelength must be positive");
  }
  TransitionLine line;
  line.omega_a = 2.0 * constants::pi * constants::speed_of_light / wavelength;
  line.gamma = gamma;
  line.multipolarity = 2;
  line.lower = {6, 0, 0};
  line.upper = {5, 2, m_upper};
  line.validate();
  return line;
}

complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("spherical harmonic needs |m| <= l");
  }
  const int am = std::abs(m);
  const double log_ratio = std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0);
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * constants::pi) * std::exp(log_ratio));
  const double plm = assoc_legendre(l, am, std::cos(theta));
  const complex y = norm * plm * std::polar(1.0, am * phi);
  if (m >= 0) {
    return y;
  }
  // Y_{l,-m} = (-1)^m conj(Y_{l,m})
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

complex angular_quadrupole_integral(const AtomicLevel& lower, const AtomicLevel& upper, Axis a,
                                    Axis b) {
  static const quad::GaussLegendreRule rule = quad::gauss_legendre(polar_nodes);
  const double dphi = 2.0 * constants::pi / static_cast<double>(azimuthal_nodes);
  complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double cos_t = rule.nodes[i];
    const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
    const double theta = std::acos(cos_t);
    complex ring(0.0, 0.0);
    for (std::size_t j = 0; j < azimuthal_nodes; ++j) {
      const double phi = dphi * static_cast<double>(j);
      const double nn = unit_component(a, sin_t, cos_t, phi) * unit_component(b, sin_t, cos_t, phi);
      ring += std::conj(spherical_harmonic(lower.L, lower.m, theta, phi)) * nn *
              spherical_harmonic(upper.L, upper.m, theta, phi);
    }
    sum += rule.weights[i] * ring * dphi;
  }
  return sum;
}

RadialIntegral radial_quadrupole_integral(const AtomicLevel& lower, const AtomicLevel& upper,
                                          double z_eff) {
  lower.validate();
  upper.validate();
  const HydrogenicState lo = hydrogenic(lower, z_eff);
  const HydrogenicState up = hydrogenic(upper, z_eff);
  lo.validate();
  up.validate();
  const double r_max = std::max(hydrogenic_cutoff(lo), hydrogenic_cutoff(up));
  const auto integrand = [&](double r) {
    const double r2 = r * r;
    return hydrogenic_radial(lo, r) * hydrogenic_radial(up, r) * r2 * r2;
  };
  const DualQuadrature dual = dual_quadrature(integrand, 0.0, r_max, radial_tolerance);
  return {dual.value, dual.alternate, dual.discrepancy};
}

MatrixElement quadrupole_matrix_element(const AtomicLevel& lower, const AtomicLevel& upper,
                                        Axis a, Axis b, double z_eff) {
  const RadialIntegral radial = radial_quadrupole_integral(lower, upper, z_eff);
  return {radial.value * angular_quadrupole_integral(lower, upper, a, b), radial.discrepancy};
}

TensorResult quadrupole_tensor(const AtomicLevel& lower, const AtomicLevel& upper,
                               double z_eff) {
  const RadialIntegral radial = radial_quadrupole_integral(lower, upper, z_eff);
  TensorResult result{QuadrupoleTensor{}, radial.discrepancy};
  constexpr Axis axes[] = {Axis::X, Axis::Y, Axis::Z};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      result.tensor.set(axes[i], axes[j],
                        radial.value * angular_quadrupole_integral(lower, upper, axes[i], axes[j]));
    }
  }
  return result;
}

ModifiedMoments modified_moments(const QuadrupoleTensor& tensor, const Polarization& pol) {
  const complex alpha = pol.alpha();
  const complex beta = pol.beta();
  return {alpha * tensor(Axis::X, Axis::X) + beta * tensor(Axis::X, Axis::Y),
          alpha * tensor(Axis::Y, Axis::X) + beta * tensor(Axis::Y, Axis::Y),
          alpha * tensor(Axis::Z, Axis::X) + beta * tensor(Axis::Z, Axis::Y)};
}

ModifiedMoments channel_moments(int delta_m, double q_xx_abs, double q_xz_abs,
                                const Polarization& pol) {
  const complex i(0.0, 1.0);
  switch (delta_m) {
    case 0:
      return {pol.alpha() * q_xx_abs, pol.beta() * q_xx_abs, 0.0};
    case 1:
      return {0.0, 0.0, i * q_xz_abs * pol.plus_factor()};
    case -1:
      return {0.0, 0.0, i * q_xz_abs * pol.minus_factor()};
    case 2: {
      const complex q1 = q_xx_abs * pol.plus_factor();
      return {q1, i * q1, 0.0};
    }
    case -2: {
      const complex q1 = q_xx_abs * pol.minus_factor();
      return {q1, -i * q1, 0.0};
    }
    default:
      throw DomainError("quadrupole channels need |delta_m| <= 2, got " +
                        std::to_string(delta_m));
  }
}

}  // namespace vortexq
