#include "vortexq/absorption.hpp"

#include <cmath>

#include "vortexq/constants.hpp"
#include "vortexq/errors.hpp"

namespace vortexq {
namespace {

void require_linewidth(double gamma) {
  if (!(gamma > 0.0)) {
    throw DomainError("linewidth gamma must be positive");
  }
}

}  // namespace

double DetuningSpec::detuning(double omega_a, double gamma) const noexcept {
  return relative_ ? value_ * gamma : value_ - omega_a;
}

double DetuningSpec::omega(double omega_a, double gamma) const noexcept {
  return relative_ ? omega_a + value_ * gamma : value_;
}

std::string_view to_string(Validity v) noexcept {
  return v == Validity::GoldenRuleOk ? "GoldenRuleOk" : "StrongCouplingWarning";
}

double lorentzian_dos_detuned(double detuning, double gamma) {
  require_linewidth(gamma);
  const double half = 0.5 * gamma;
  return half / (constants::pi * (detuning * detuning + half * half));
}

double lorentzian_dos(double omega, double omega_a, double gamma) {
  return lorentzian_dos_detuned(omega - omega_a, gamma);
}

double absorption_rate_detuned(complex rabi, double detuning, double gamma) {
  require_linewidth(gamma);
  const double half = 0.5 * gamma;
  return gamma * std::norm(rabi) / (detuning * detuning + half * half);
}

double absorption_rate(complex rabi, double omega, double omega_a, double gamma) {
  return absorption_rate_detuned(rabi, omega - omega_a, gamma);
}

complex transition_matrix_element(complex rabi, double theta) {
  return constants::hbar * rabi * std::polar(1.0, theta);
}

std::vector<AbsorptionResult> rate_profile(const LGMode& mode, const Channel& channel,
                                           const TransitionLine& line,
                                           const RabiScaling& scaling,
                                           const std::vector<double>& rho_bar,
                                           DetuningSpec detuning, Convention conv) {
  if (rho_bar.empty()) {
    throw ConfigError("rate profile needs a non-empty radial grid");
  }
  line.validate();
  const double delta = detuning.detuning(line.omega_a, line.gamma);
  const std::vector<complex> rabi = rabi_profile(channel, mode, scaling, rho_bar, conv);
  std::vector<AbsorptionResult> out;
  out.reserve(rho_bar.size());
  for (std::size_t i = 0; i < rho_bar.size(); ++i) {
    const double rate = absorption_rate_detuned(rabi[i], delta, line.gamma);
    const double magnitude = std::abs(rabi[i]);
    out.push_back({rho_bar[i], magnitude, rate, rate / line.gamma,
                   magnitude > line.gamma ? Validity::StrongCouplingWarning
                                          : Validity::GoldenRuleOk});
  }
  return out;
}

}  // namespace vortexq
