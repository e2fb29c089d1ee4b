#pragma once

// Golden-rule absorption rate with a Lorentzian density of final states of
// FWHM gamma (the spontaneous quadrupole emission rate).

#include <complex>
#include <string_view>
#include <vector>

#include "vortexq/atomic.hpp"
#include "vortexq/beam.hpp"
#include "vortexq/coupling.hpp"

namespace vortexq {

/// Drive specified either as an absolute angular frequency or as a detuning
/// in units of gamma. The detuning form never goes through omega - omega_a,
/// so it is exact.
class DetuningSpec {
 public:
  static DetuningSpec from_omega(double omega) { return DetuningSpec(omega, false); }
  static DetuningSpec from_detuning_over_gamma(double d) { return DetuningSpec(d, true); }
  static DetuningSpec resonant() { return from_detuning_over_gamma(0.0); }

  /// omega - omega_a, rad/s.
  double detuning(double omega_a, double gamma) const noexcept;
  double omega(double omega_a, double gamma) const noexcept;

 private:
  DetuningSpec(double value, bool relative) : value_(value), relative_(relative) {}
  double value_;
  bool relative_;
};

enum class Validity { GoldenRuleOk, StrongCouplingWarning };

std::string_view to_string(Validity v) noexcept;

struct AbsorptionResult {
  double rho_bar;
  double rabi_abs;         // |Omega|, 1/s
  double rate;             // Gamma_if, 1/s
  double rate_over_gamma;  // Gamma_if / gamma
  Validity validity;       // StrongCouplingWarning iff |Omega| > gamma
};

/// (1/pi) (gamma/2) / ((omega - omega_a)^2 + (gamma/2)^2), in s.
double lorentzian_dos(double omega, double omega_a, double gamma);
double lorentzian_dos_detuned(double detuning, double gamma);

/// gamma |Omega|^2 / ((omega - omega_a)^2 + (gamma/2)^2), in 1/s.
double absorption_rate(complex rabi, double omega, double omega_a, double gamma);
double absorption_rate_detuned(complex rabi, double detuning, double gamma);

/// M_if = hbar Omega exp(i theta), J.
complex transition_matrix_element(complex rabi, double theta);

/// Rate at each grid radius (sampled on the x axis) for an allowed channel.
/// Throws ConfigError for an empty grid.
std::vector<AbsorptionResult> rate_profile(const LGMode& mode, const Channel& channel,
                                           const TransitionLine& line,
                                           const RabiScaling& scaling,
                                           const std::vector<double>& rho_bar,
                                           DetuningSpec detuning = DetuningSpec::resonant(),
                                           Convention conv = Convention::Direct);

}  // namespace vortexq
