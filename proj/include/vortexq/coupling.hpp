#pragma once

// Quadrupole Rabi frequency of an atom in a circularly polarized LG mode.
//
// The general form is
//     Omega = c * (u / hbar) * (G Q1 + H Q2 + i k Q3),
// with G = (1/u) du/dX + i dtheta/dX and H the same along Y. The closed
// forms for the three channel families are algebraic specializations of it
// and are checked against it in the tests.

#include <string>
#include <string_view>
#include <vector>

#include "vortexq/atomic.hpp"
#include "vortexq/beam.hpp"

namespace vortexq {

enum class ChannelKind { NoOamTransfer, OamTransfer, TamTransfer };

std::string_view to_string(ChannelKind kind) noexcept;

/// A (delta_m, ell, sigma_z) combination admitted by the selection rules.
struct Channel {
  int delta_m = 0;
  int ell = 0;
  int sigma_z = -1;
  ChannelKind kind = ChannelKind::NoOamTransfer;

  /// Picks the kind from delta_m; no selection-rule checks.
  static Channel make(int delta_m, int ell, int sigma_z);

  bool operator==(const Channel&) const = default;
};

/// Overall prefactor of the Rabi frequency. Direct uses 1 (the form the
/// reported profiles and Omega_0 are based on); Hamiltonian uses -1/2 as in
/// the interaction-Hamiltonian derivation. Rates differ by |prefactor|^2.
enum class Convention { Direct, Hamiltonian };

double prefactor(Convention conv) noexcept;

/// Scaling factors, all in 1/s.
struct RabiScaling {
  double omega_01;  // E_k00 |Q_xx| / (hbar w0)
  double omega_02;  // E_k00 |Q_xz| / (hbar w0)
  double omega_0;   // omega_01 * xi
  double xi;        // w0 / lambda
};

/// Magnitudes in e*a0^2.
RabiScaling scaling_factors(const LGMode& mode, double q_xx_abs, double q_xz_abs);
RabiScaling scaling_factors(const LGMode& mode, const QuadrupoleTensor& tensor);

/// G(R), 1/m. Throws DomainError on the beam axis.
complex field_log_gradient_x(const LGMode& mode, const Position& pos);
/// H(R), 1/m. Throws DomainError on the beam axis.
complex field_log_gradient_y(const LGMode& mode, const Position& pos);

/// General form, 1/s. Moments in e*a0^2. Throws DomainError on the axis.
complex rabi_general(const LGMode& mode, const ModifiedMoments& moments, const Position& pos,
                     Convention conv = Convention::Direct);

/// Delta m = 0 closed form (valid for any polarization).
complex rabi_no_oam(const LGMode& mode, const RabiScaling& scaling, const Position& pos,
                    Convention conv = Convention::Direct);

/// Delta m = +-1 closed form; depends on rho_bar only.
complex rabi_oam(const LGMode& mode, const RabiScaling& scaling, int delta_m, double rho_bar,
                 Convention conv = Convention::Direct);

/// Delta m = +-2 closed form.
complex rabi_tam(const LGMode& mode, const RabiScaling& scaling, int delta_m,
                 const Position& pos, Convention conv = Convention::Direct);

/// Dispatches on channel.delta_m.
complex rabi_channel(const Channel& channel, const LGMode& mode, const RabiScaling& scaling,
                     const Position& pos, Convention conv = Convention::Direct);

/// Channel Rabi frequency sampled on the x axis (phi = 0) at each rho_bar.
std::vector<complex> rabi_profile(const Channel& channel, const LGMode& mode,
                                  const RabiScaling& scaling, const std::vector<double>& rho_bar,
                                  Convention conv = Convention::Direct);

/// Channels open to each circular polarization in `pols`: TAM conservation
/// ell + sigma_z = delta_m, |delta_m| <= L, and non-vanishing gate
/// (alpha + i beta for delta_m > 0, alpha - i beta for delta_m < 0).
/// Throws ConfigError for L != 2 and SelectionRuleError for non-circular light.
std::vector<Channel> allowed_channels(const TransitionLine& line,
                                      const std::vector<Polarization>& pols);

/// Validates one requested channel, throwing SelectionRuleError naming the
/// first violated rule.
Channel check_channel(const TransitionLine& line, int delta_m, int ell, int sigma_z);

/// The channel family that carries the appreciable rate (delta_m = +-1).
bool is_dominant(const Channel& channel) noexcept;

/// Human-readable gate for a channel: "alpha+i*beta", "alpha-i*beta" or "none".
std::string_view gating_factor_name(const Channel& channel) noexcept;

}  // namespace vortexq
