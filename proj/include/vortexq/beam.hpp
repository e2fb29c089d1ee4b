#pragma once

// Circularly polarized Laguerre-Gaussian mode in the paraxial, near-waist
// approximation: amplitude u = E_k00 g_{l,p}(rho/w0), phase kZ + l*phi - wt.
// Gouy phase and wavefront curvature are not modelled.

#include <complex>
#include <cstddef>
#include <vector>

namespace vortexq {

using complex = std::complex<double>;

/// Transverse polarization vector alpha*x + beta*y, kept normalized.
class Polarization {
 public:
  /// Renormalizes (alpha, beta); throws DomainError if both vanish.
  Polarization(complex alpha, complex beta);

  /// sigma = +1 -> (1, i)/sqrt2, sigma = -1 -> (1, -i)/sqrt2.
  static Polarization circular(int sigma);
  static Polarization linear_x() { return {1.0, 0.0}; }

  complex alpha() const noexcept { return alpha_; }
  complex beta() const noexcept { return beta_; }

  /// sigma_z = i(alpha beta* - beta alpha*), in [-1, 1].
  double spin() const noexcept;

  /// alpha + i beta; vanishes for sigma_z = +1.
  complex plus_factor() const noexcept { return alpha_ + complex(0.0, 1.0) * beta_; }
  /// alpha - i beta; vanishes for sigma_z = -1.
  complex minus_factor() const noexcept { return alpha_ - complex(0.0, 1.0) * beta_; }

 private:
  complex alpha_;
  complex beta_;
};

/// LG_{l,p} mode. Lengths in metres, intensity in W/m^2.
class LGMode {
 public:
  /// Throws ConfigError unless wavelength > 0, waist > 0, intensity >= 0.
  LGMode(double wavelength, double waist, int ell, unsigned p, double intensity,
         Polarization polarization);

  double wavelength() const noexcept { return wavelength_; }
  double waist() const noexcept { return waist_; }
  int ell() const noexcept { return ell_; }
  unsigned ell_abs() const noexcept { return static_cast<unsigned>(ell_ < 0 ? -ell_ : ell_); }
  unsigned p() const noexcept { return p_; }
  double intensity() const noexcept { return intensity_; }
  const Polarization& polarization() const noexcept { return polarization_; }

  double wavenumber() const noexcept;       // k = 2 pi / lambda
  double angular_frequency() const noexcept;  // omega = c k
  double waist_ratio() const noexcept { return waist_ / wavelength_; }  // xi
  /// Plane-wave amplitude E_k00 = sqrt(2 I / (eps0 c)), V/m.
  double plane_wave_amplitude() const noexcept;

  LGMode with_waist(double waist) const;
  LGMode with_intensity(double intensity) const;
  LGMode with_polarization(Polarization polarization) const;

 private:
  double wavelength_;
  double waist_;
  int ell_;
  unsigned p_;
  double intensity_;
  Polarization polarization_;
};

/// Centre-of-mass position, Cartesian, metres.
struct Position {
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;

  static Position polar(double rho, double phi, double z = 0.0);

  double rho() const noexcept;
  double phi() const noexcept;  // atan2(Y, X), in (-pi, pi]
  double rho_bar(const LGMode& mode) const noexcept { return rho() / mode.waist(); }
};

/// Factors of g_{l,p}: g = envelope * laguerre, and slope = dL/dx at
/// x = 2 rho_bar^2. Keeping them apart avoids 0*inf at Laguerre nodes.
struct RadialFactors {
  double envelope;
  double laguerre;
  double slope;

  double profile() const noexcept { return envelope * laguerre; }
};

RadialFactors radial_factors(int ell, unsigned p, double rho_bar);

/// Dimensionless profile g_{l,p}(rho_bar).
double g_profile(int ell, unsigned p, double rho_bar);
double g_profile(const LGMode& mode, double rho_bar);

/// u = E_k00 g_{l,p}(rho_bar), V/m.
double field_amplitude(const LGMode& mode, double rho_bar);

/// theta = kZ + l phi - omega t.
double phase(const LGMode& mode, const Position& pos, double t = 0.0);

/// Integral of |g|^2 over the transverse plane, m^2; equals pi w0^2 / 2.
double mode_power_integral(const LGMode& mode);

/// Uniform grid of dimensionless radii.
std::vector<double> radial_grid(double lo, double hi, std::size_t samples);

/// Default profile grid: [1e-6, 4] with 1000 samples.
inline constexpr double default_grid_start = 1e-6;
inline constexpr double default_grid_end = 4.0;
inline constexpr std::size_t default_grid_samples = 1000;

}  // namespace vortexq
