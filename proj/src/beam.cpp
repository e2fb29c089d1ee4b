#include "vortexq/beam.hpp"

#include <cmath>
#include <string>

#include "vortexq/constants.hpp"
#include "vortexq/errors.hpp"
#include "vortexq/quadrature.hpp"
#include "vortexq/specfun.hpp"

namespace vortexq {

Polarization::Polarization(complex alpha, complex beta) {
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("polarization vector must be non-zero and finite");
  }
  alpha_ = alpha / norm;
  beta_ = beta / norm;
}

Polarization Polarization::circular(int sigma) {
  if (sigma != 1 && sigma != -1) {
    throw DomainError("circular polarization needs sigma_z = +1 or -1, got " +
                      std::to_string(sigma));
  }
  const double c = std::sqrt(0.5);
  return {complex(c, 0.0), complex(0.0, sigma * c)};
}

double Polarization::spin() const noexcept {
  const complex s = complex(0.0, 1.0) * (alpha_ * std::conj(beta_) - beta_ * std::conj(alpha_));
  return s.real();
}

LGMode::LGMode(double wavelength, double waist, int ell, unsigned p, double intensity,
               Polarization polarization)
    : wavelength_(wavelength),
      waist_(waist),
      ell_(ell),
      p_(p),
      intensity_(intensity),
      polarization_(polarization) {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw ConfigError("wavelength must be positive");
  }
  if (!(waist > 0.0) || !std::isfinite(waist)) {
    throw ConfigError("beam waist must be positive");
  }
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
    throw ConfigError("intensity must be non-negative");
  }
}

double LGMode::wavenumber() const noexcept { return 2.0 * constants::pi / wavelength_; }

double LGMode::angular_frequency() const noexcept {
  return constants::speed_of_light * wavenumber();
}

double LGMode::plane_wave_amplitude() const noexcept {
  return std::sqrt(2.0 * intensity_ /
                   (constants::vacuum_permittivity * constants::speed_of_light));
}

LGMode LGMode::with_waist(double waist) const {
  return {wavelength_, waist, ell_, p_, intensity_, polarization_};
}

LGMode LGMode::with_intensity(double intensity) const {
  return {wavelength_, waist_, ell_, p_, intensity, polarization_};
}

LGMode LGMode::with_polarization(Polarization polarization) const {
  return {wavelength_, waist_, ell_, p_, intensity_, polarization};
}

Position Position::polar(double rho, double phi, double z) {
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

double Position::rho() const noexcept { return std::hypot(X, Y); }

double Position::phi() const noexcept { return std::atan2(Y, X); }

RadialFactors radial_factors(int ell, unsigned p, double rho_bar) {
  const unsigned a = static_cast<unsigned>(ell < 0 ? -ell : ell);
  const double x = 2.0 * rho_bar * rho_bar;
  const double envelope = std::exp(0.5 * log_factorial_ratio(p, a) - rho_bar * rho_bar) *
                          std::pow(std::sqrt(2.0) * rho_bar, static_cast<int>(a));
  return {envelope, assoc_laguerre({p, a}, x), assoc_laguerre_deriv({p, a}, x)};
}

double g_profile(int ell, unsigned p, double rho_bar) {
  return radial_factors(ell, p, rho_bar).profile();
}

double g_profile(const LGMode& mode, double rho_bar) {
  return g_profile(mode.ell(), mode.p(), rho_bar);
}

double field_amplitude(const LGMode& mode, double rho_bar) {
  return mode.plane_wave_amplitude() * g_profile(mode, rho_bar);
}

double phase(const LGMode& mode, const Position& pos, double t) {
  return mode.wavenumber() * pos.Z + mode.ell() * pos.phi() - mode.angular_frequency() * t;
}

double mode_power_integral(const LGMode& mode) {
  const double cutoff = std::sqrt(0.5 * mode.ell_abs() + mode.p()) + 10.0;
  const double dimensionless = quad::integrate_gl_refined(
      [&](double rb) {
        const double g = g_profile(mode, rb);
        return 2.0 * constants::pi * rb * g * g;
      },
      0.0, cutoff, 1e-13);
  return dimensionless * mode.waist() * mode.waist();
}

std::vector<double> radial_grid(double lo, double hi, std::size_t samples) {
  if (samples < 2) {
    throw ConfigError("radial grid needs at least 2 samples");
  }
  if (!(lo >= 0.0) || !(hi > lo)) {
    throw ConfigError("radial grid requires 0 <= lo < hi");
  }
  std::vector<double> grid(samples);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace vortexq
