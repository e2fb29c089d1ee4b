#include "vortexq/coupling.hpp"

#include <cmath>
#include <cstdlib>

#include "vortexq/constants.hpp"
#include "vortexq/errors.hpp"

namespace vortexq {
namespace {

constexpr complex I(0.0, 1.0);
constexpr double gate_floor = 1e-12;

struct ScaledGradients {
  complex ug;  // u * G, V/m^2
  complex uh;  // u * H
  double u;
};

// u*G and u*H without dividing by the Laguerre factor, so that both stay finite
// at radial nodes of the mode.
ScaledGradients scaled_gradients(const LGMode& mode, const Position& pos) {
  const double rho2 = pos.X * pos.X + pos.Y * pos.Y;
  if (!(rho2 > 0.0)) {
    throw DomainError("gradient terms are singular on the beam axis (rho = 0)");
  }
  const double w0 = mode.waist();
  const double w2 = w0 * w0;
  const RadialFactors f = radial_factors(mode.ell(), mode.p(), std::sqrt(rho2) / w0);
  const double e0 = mode.plane_wave_amplitude();
  const double u = e0 * f.profile();
  const double ue = e0 * f.envelope;
  const double la = mode.ell_abs();
  const double l = mode.ell();
  const complex ug = u * complex(la * pos.X / rho2 - 2.0 * pos.X / w2, -l * pos.Y / rho2) +
                     ue * f.slope * 4.0 * pos.X / w2;
  const complex uh = u * complex(la * pos.Y / rho2 - 2.0 * pos.Y / w2, l * pos.X / rho2) +
                     ue * f.slope * 4.0 * pos.Y / w2;
  return {ug, uh, u};
}

void require_off_axis(double rho_bar) {
  if (!(rho_bar > 0.0)) {
    throw DomainError("channel formula is singular on the beam axis (rho = 0)");
  }
}

}  // namespace

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::NoOamTransfer:
      return "NoOamTransfer";
    case ChannelKind::OamTransfer:
      return "OamTransfer";
    case ChannelKind::TamTransfer:
      return "TamTransfer";
  }
  return "?";
}

Channel Channel::make(int delta_m, int ell, int sigma_z) {
  ChannelKind kind = ChannelKind::NoOamTransfer;
  if (std::abs(delta_m) == 1) {
    kind = ChannelKind::OamTransfer;
  } else if (std::abs(delta_m) == 2) {
    kind = ChannelKind::TamTransfer;
  }
  return {delta_m, ell, sigma_z, kind};
}

double prefactor(Convention conv) noexcept {
  return conv == Convention::Hamiltonian ? -0.5 : 1.0;
}

RabiScaling scaling_factors(const LGMode& mode, double q_xx_abs, double q_xz_abs) {
  const double base = mode.plane_wave_amplitude() * constants::quadrupole_unit /
                      (constants::hbar * mode.waist());
  const double omega_01 = base * q_xx_abs;
  const double xi = mode.waist_ratio();
  return {omega_01, base * q_xz_abs, omega_01 * xi, xi};
}

RabiScaling scaling_factors(const LGMode& mode, const QuadrupoleTensor& tensor) {
  return scaling_factors(mode, std::abs(tensor(Axis::X, Axis::X)),
                         std::abs(tensor(Axis::X, Axis::Z)));
}

complex field_log_gradient_x(const LGMode& mode, const Position& pos) {
  const ScaledGradients s = scaled_gradients(mode, pos);
  if (s.u == 0.0) {
    throw DomainError("log-gradient undefined where the mode amplitude vanishes");
  }
  return s.ug / s.u;
}

complex field_log_gradient_y(const LGMode& mode, const Position& pos) {
  const ScaledGradients s = scaled_gradients(mode, pos);
  if (s.u == 0.0) {
    throw DomainError("log-gradient undefined where the mode amplitude vanishes");
  }
  return s.uh / s.u;
}

complex rabi_general(const LGMode& mode, const ModifiedMoments& moments, const Position& pos,
                     Convention conv) {
  const ScaledGradients s = scaled_gradients(mode, pos);
  const complex sum = s.ug * moments.q1 + s.uh * moments.q2 +
                      I * mode.wavenumber() * s.u * moments.q3;
  return prefactor(conv) * constants::quadrupole_unit / constants::hbar * sum;
}

complex rabi_no_oam(const LGMode& mode, const RabiScaling& scaling, const Position& pos,
                    Convention conv) {
  const double w0 = mode.waist();
  const double xb = pos.X / w0;
  const double yb = pos.Y / w0;
  const double rb2 = xb * xb + yb * yb;
  require_off_axis(rb2);
  const RadialFactors f = radial_factors(mode.ell(), mode.p(), std::sqrt(rb2));
  const double g = f.profile();
  const complex alpha = mode.polarization().alpha();
  const complex beta = mode.polarization().beta();
  const double radial = (mode.ell_abs() / rb2 - 2.0) * g + 4.0 * f.envelope * f.slope;
  const complex value = radial * (alpha * xb + beta * yb) +
                        I * (mode.ell() / rb2) * g * (beta * xb - alpha * yb);
  return prefactor(conv) * scaling.omega_01 * value;
}

complex rabi_oam(const LGMode& mode, const RabiScaling& scaling, int delta_m, double rho_bar,
                 Convention conv) {
  if (delta_m != 1 && delta_m != -1) {
    throw DomainError("OAM-transfer formula needs delta_m = +-1");
  }
  const Polarization& pol = mode.polarization();
  const complex gate = delta_m > 0 ? pol.plus_factor() : pol.minus_factor();
  return -prefactor(conv) * scaling.omega_02 * gate * mode.wavenumber() * mode.waist() *
         g_profile(mode, rho_bar);
}

complex rabi_tam(const LGMode& mode, const RabiScaling& scaling, int delta_m,
                 const Position& pos, Convention conv) {
  if (delta_m != 2 && delta_m != -2) {
    throw DomainError("TAM-transfer formula needs delta_m = +-2");
  }
  const double w0 = mode.waist();
  const double xb = pos.X / w0;
  const double yb = pos.Y / w0;
  const double rb2 = xb * xb + yb * yb;
  require_off_axis(rb2);
  const RadialFactors f = radial_factors(mode.ell(), mode.p(), std::sqrt(rb2));
  const double la = mode.ell_abs();
  const double l = mode.ell();
  const Polarization& pol = mode.polarization();
  // The winding term survives only when ell and delta_m have opposite signs.
  const double winding = delta_m > 0 ? (la - l) / rb2 : (la + l) / rb2;
  const double radial = (winding - 2.0) * f.profile() + 4.0 * f.envelope * f.slope;
  const complex gate = delta_m > 0 ? pol.plus_factor() : pol.minus_factor();
  const complex chirality = delta_m > 0 ? complex(xb, yb) : complex(xb, -yb);
  return prefactor(conv) * scaling.omega_01 * gate * chirality * radial;
}

complex rabi_channel(const Channel& channel, const LGMode& mode, const RabiScaling& scaling,
                     const Position& pos, Convention conv) {
  switch (channel.delta_m) {
    case 0:
      return rabi_no_oam(mode, scaling, pos, conv);
    case 1:
    case -1:
      return rabi_oam(mode, scaling, channel.delta_m, pos.rho_bar(mode), conv);
    case 2:
    case -2:
      return rabi_tam(mode, scaling, channel.delta_m, pos, conv);
    default:
      throw DomainError("quadrupole channels need |delta_m| <= 2");
  }
}

std::vector<complex> rabi_profile(const Channel& channel, const LGMode& mode,
                                  const RabiScaling& scaling, const std::vector<double>& rho_bar,
                                  Convention conv) {
  std::vector<complex> out;
  out.reserve(rho_bar.size());
  for (double rb : rho_bar) {
    out.push_back(rabi_channel(channel, mode, scaling, {rb * mode.waist(), 0.0, 0.0}, conv));
  }
  return out;
}

namespace {

int circular_sigma(const Polarization& pol) {
  const double s = pol.spin();
  if (std::abs(s - 1.0) < 1e-9) {
    return 1;
  }
  if (std::abs(s + 1.0) < 1e-9) {
    return -1;
  }
  throw SelectionRuleError("circular-polarization",
                           "channels are defined for sigma_z = +-1 only, got sigma_z = " +
                               std::to_string(s));
}

void require_quadrupole(const TransitionLine& line) {
  if (line.multipolarity != 2) {
    throw ConfigError("only quadrupole lines (L = 2) are supported, got L = " +
                      std::to_string(line.multipolarity));
  }
}

bool gate_open(const Polarization& pol, int delta_m) {
  if (delta_m == 0) {
    return true;
  }
  const complex gate = delta_m > 0 ? pol.plus_factor() : pol.minus_factor();
  return std::abs(gate) > gate_floor;
}

}  // namespace

std::vector<Channel> allowed_channels(const TransitionLine& line,
                                      const std::vector<Polarization>& pols) {
  require_quadrupole(line);
  const int L = line.multipolarity;
  std::vector<Channel> out;
  for (const Polarization& pol : pols) {
    const int sigma = circular_sigma(pol);
    for (int magnitude = 0; magnitude <= L; ++magnitude) {
      for (int sign : {1, -1}) {
        if (magnitude == 0 && sign < 0) {
          continue;
        }
        const int dm = sign * magnitude;
        const int ell = dm - sigma;
        if (std::abs(ell + sigma) > L || !gate_open(pol, dm)) {
          continue;
        }
        out.push_back(Channel::make(dm, ell, sigma));
      }
    }
  }
  return out;
}

Channel check_channel(const TransitionLine& line, int delta_m, int ell, int sigma_z) {
  require_quadrupole(line);
  if (sigma_z != 1 && sigma_z != -1) {
    throw SelectionRuleError("circular-polarization",
                             "sigma_z must be +1 or -1, got " + std::to_string(sigma_z));
  }
  if (std::abs(delta_m) > line.multipolarity) {
    throw SelectionRuleError("delta-m-range",
                             "quadrupole transitions allow |delta_m| <= 2, got " +
                                 std::to_string(delta_m));
  }
  if (ell + sigma_z != delta_m) {
    throw SelectionRuleError("tam-conservation",
                             "ell + sigma_z = " + std::to_string(ell + sigma_z) +
                                 " must equal delta_m = " + std::to_string(delta_m));
  }
  if (!gate_open(Polarization::circular(sigma_z), delta_m)) {
    throw SelectionRuleError("polarization-gating",
                             std::string(delta_m > 0 ? "alpha + i beta" : "alpha - i beta") +
                                 " vanishes for sigma_z = " + std::to_string(sigma_z) +
                                 ", delta_m = " + std::to_string(delta_m));
  }
  return Channel::make(delta_m, ell, sigma_z);
}

bool is_dominant(const Channel& channel) noexcept {
  return channel.kind == ChannelKind::OamTransfer;
}

std::string_view gating_factor_name(const Channel& channel) noexcept {
  if (channel.delta_m > 0) {
    return "alpha+i*beta";
  }
  if (channel.delta_m < 0) {
    return "alpha-i*beta";
  }
  return "none";
}

}  // namespace vortexq
