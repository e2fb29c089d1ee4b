#pragma once

// Quadrupole matrix elements between hydrogen-like states and their
// contraction with the beam polarization.
//
// Conventions:
//  * spherical harmonics carry the Condon-Shortley phase;
//  * elements are e<lower| x_a x_b |upper>, i.e. the coupling that appears
//    in the absorption amplitude, in units of e*a0^2;
//  * one effective nuclear charge is applied to both states.

#include <array>
#include <complex>

#include "vortexq/beam.hpp"

namespace vortexq {

struct AtomicLevel {
  int n = 1;
  int L = 0;
  int m = 0;

  /// Throws DomainError unless |m| <= L <= n-1.
  void validate() const;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

char axis_name(Axis a) noexcept;

/// Symmetric 3x3 complex tensor, entries in e*a0^2.
class QuadrupoleTensor {
 public:
  QuadrupoleTensor() { q_.fill(complex(0.0, 0.0)); }

  complex operator()(Axis a, Axis b) const noexcept { return q_[index(a, b)]; }
  void set(Axis a, Axis b, complex value) noexcept {
    q_[index(a, b)] = value;
    q_[index(b, a)] = value;
  }

  double max_abs() const noexcept;

 private:
  static std::size_t index(Axis a, Axis b) noexcept {
    return static_cast<std::size_t>(a) * 3 + static_cast<std::size_t>(b);
  }
  std::array<complex, 9> q_;
};

/// Polarization-contracted moments Q_j = alpha Q_jx + beta Q_jy, e*a0^2.
struct ModifiedMoments {
  complex q1{};
  complex q2{};
  complex q3{};
};

/// Two-level line: omega_a, linewidth gamma (= Gamma_S), multipolarity.
struct TransitionLine {
  double omega_a = 0.0;  // rad/s
  double gamma = 0.0;    // 1/s
  int multipolarity = 2;
  AtomicLevel lower{6, 0, 0};
  AtomicLevel upper{5, 2, 0};

  /// Throws ConfigError for non-positive rates, DomainError for invalid levels.
  void validate() const;
  /// True when gamma / omega_a > 1e-3 and the narrow-line picture is doubtful.
  bool broad_line() const noexcept { return gamma / omega_a > 1e-3; }
};

/// Cs 6S -> 5D line at the given vacuum wavelength (m) and linewidth (1/s).
TransitionLine cesium_6s_5d(double wavelength, double gamma, int m_upper = 0);

inline constexpr double cesium_effective_charge = 8.56;

/// Complex spherical harmonic Y_lm(theta, phi) with Condon-Shortley phase.
complex spherical_harmonic(int l, int m, double theta, double phi);

/// Angular factor of <lower| n_a n_b |upper> over the unit sphere
/// (Gauss-Legendre 64 in cos(theta) x trapezoid 128 in phi).
complex angular_quadrupole_integral(const AtomicLevel& lower, const AtomicLevel& upper, Axis a,
                                    Axis b);

struct RadialIntegral {
  double value;        // Gauss-Legendre panels, a0^2
  double alternate;    // adaptive Simpson
  double discrepancy;  // relative
};

/// Integral of R_lower R_upper r^4 dr over [0, 40 n_max^2 / Z].
RadialIntegral radial_quadrupole_integral(const AtomicLevel& lower, const AtomicLevel& upper,
                                          double z_eff);

struct MatrixElement {
  complex value;       // e*a0^2
  double discrepancy;  // relative disagreement between the two radial schemes
};

MatrixElement quadrupole_matrix_element(const AtomicLevel& lower, const AtomicLevel& upper,
                                        Axis a, Axis b, double z_eff);

struct TensorResult {
  QuadrupoleTensor tensor;
  double discrepancy;
};

/// All six independent components, sharing one radial integral.
TensorResult quadrupole_tensor(const AtomicLevel& lower, const AtomicLevel& upper,
                               double z_eff);

ModifiedMoments modified_moments(const QuadrupoleTensor& tensor, const Polarization& pol);

/// Moments of the idealized case list used by the channel formulas, built
/// from magnitudes only:
///   dm = 0  : (alpha q_xx, beta q_xx, 0)
///   dm = +-1: (0, 0, i q_xz (alpha +- i beta))
///   dm = +-2: Q1 = q_xx (alpha +- i beta), Q2 = +-i Q1, Q3 = 0
ModifiedMoments channel_moments(int delta_m, double q_xx_abs, double q_xz_abs,
                                const Polarization& pol);

}  // namespace vortexq
