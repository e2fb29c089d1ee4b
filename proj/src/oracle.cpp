#include "vortexq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "vortexq/absorption.hpp"
#include "vortexq/constants.hpp"
#include "vortexq/errors.hpp"
#include "vortexq/specfun.hpp"

namespace vortexq {
namespace {

constexpr complex I(0.0, 1.0);

constexpr double tol_finite_difference = 1e-6;
constexpr double tol_dual_quadrature = 1e-8;
constexpr double tol_algebraic = 1e-10;
constexpr double tol_normalization = 1e-10;
constexpr double tol_mode_power = 1e-9;
constexpr double tol_laguerre_fd = 1e-7;
constexpr double tol_machine = 1e-13;

double wrap_angle(double a) {
  return std::remainder(a, 2.0 * constants::pi);
}

double amplitude_at(const LGMode& mode, double x, double y) {
  return field_amplitude(mode, std::hypot(x, y) / mode.waist());
}

// Tracks the worst sample of a check.
class Tally {
 public:
  Tally(std::string name, double tolerance) {
    report_.name = std::move(name);
    report_.tolerance = tolerance;
  }

  void add(double error, const std::string& input) {
    if (!std::isfinite(error)) {
      error = std::numeric_limits<double>::infinity();
    }
    if (error > report_.max_rel_error || report_.worst_input.empty()) {
      report_.max_rel_error = std::max(report_.max_rel_error, error);
      report_.worst_input = input;
    }
  }

  OracleReport finish() {
    report_.pass = report_.max_rel_error <= report_.tolerance;
    return report_;
  }

 private:
  OracleReport report_;
};

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(9);
  bool first = true;
  for (const auto& [key, value] : fields) {
    os << (first ? "" : ",") << key << '=' << value;
    first = false;
  }
  return os.str();
}

std::string channel_label(const Channel& c) {
  std::ostringstream os;
  os << "dm" << (c.delta_m >= 0 ? "+" : "") << c.delta_m << "_l" << c.ell << "_s"
     << (c.sigma_z > 0 ? "+" : "-") << "1";
  return os.str();
}

long double laguerre_series(unsigned p, unsigned a, long double x) {
  long double sum = 0.0L;
  for (unsigned k = 0; k <= p; ++k) {
    const long double binom =
        std::exp(std::lgamma(static_cast<long double>(p + a + 1)) -
                 std::lgamma(static_cast<long double>(p - k + 1)) -
                 std::lgamma(static_cast<long double>(a + k + 1)));
    const long double term = std::round(binom) * std::pow(x, static_cast<long double>(k)) /
                             std::tgamma(static_cast<long double>(k + 1));
    sum += (k % 2 == 0 ? term : -term);
  }
  return sum;
}

OracleReport check_laguerre_series() {
  Tally t("specfun.laguerre_recurrence_vs_series", tol_algebraic);
  for (unsigned p = 0; p <= 15; ++p) {
    for (unsigned a = 0; a <= 10; ++a) {
      for (double x : {0.1, 1.0, 10.0}) {
        const double rec = assoc_laguerre({p, a}, x);
        const double ser = static_cast<double>(laguerre_series(p, a, x));
        t.add(relative_difference(rec, ser), describe({{"p", p}, {"a", a}, {"x", x}}));
      }
    }
  }
  return t.finish();
}

OracleReport check_laguerre_derivative() {
  Tally t("specfun.laguerre_derivative_vs_fd", tol_laguerre_fd);
  for (unsigned p = 0; p <= 10; ++p) {
    for (unsigned a : {0u, 1u, 3u, 6u}) {
      for (double x : {0.3, 1.7, 4.2}) {
        const double h = 1e-5;
        const double fd =
            (assoc_laguerre({p, a}, x + h) - assoc_laguerre({p, a}, x - h)) / (2.0 * h);
        const double exact = assoc_laguerre_deriv({p, a}, x);
        const double scale = std::max({std::abs(exact), std::abs(assoc_laguerre({p, a}, x)), 1.0});
        t.add(std::abs(fd - exact) / scale, describe({{"p", p}, {"a", a}, {"x", x}}));
      }
    }
  }
  return t.finish();
}

OracleReport check_hydrogenic_normalization() {
  Tally t("specfun.hydrogenic_normalization", tol_normalization);
  for (int n = 1; n <= 7; ++n) {
    for (int L = 0; L < n; ++L) {
      for (double z : {1.0, cesium_effective_charge}) {
        const HydrogenicState s{n, L, z};
        const DualQuadrature q = dual_quadrature(
            [&](double r) {
              const double R = hydrogenic_radial(s, r);
              return R * R * r * r;
            },
            0.0, hydrogenic_cutoff(s), tol_normalization);
        t.add(std::max(std::abs(q.value - 1.0), std::abs(q.alternate - 1.0)),
              describe({{"n", n}, {"L", L}, {"Z", z}}));
      }
    }
  }
  return t.finish();
}

OracleReport check_mode_power(const OracleSettings& s) {
  Tally t("beam.mode_power_invariance", tol_mode_power);
  const double waist = s.waist_ratio * s.wavelength;
  const double expected = 0.5 * constants::pi * waist * waist;
  for (int ell = 0; ell <= 5; ++ell) {
    for (unsigned p = 0; p <= 3; ++p) {
      const LGMode mode(s.wavelength, waist, ell, p, s.intensity, Polarization::circular(-1));
      t.add(std::abs(mode_power_integral(mode) - expected) / expected,
            describe({{"ell", ell}, {"p", p}}));
    }
  }
  return t.finish();
}

OracleReport check_peak_scan() {
  Tally t("oracle.peak_scan_doughnut", tol_algebraic);
  for (int ell = 1; ell <= 3; ++ell) {
    const Peak peak = peak_scan([ell](double rb) { return std::abs(g_profile(ell, 0, rb)); },
                                default_grid_start, default_grid_end);
    const double expected = std::sqrt(0.5 * ell);
    t.add(peak.at_endpoint ? 1.0 : std::abs(peak.location - expected) / expected,
          describe({{"ell", ell}}));
  }
  return t.finish();
}

std::vector<Channel> all_channels() {
  TransitionLine line = cesium_6s_5d(685e-9, 3.34e7);
  return allowed_channels(line, {Polarization::circular(-1), Polarization::circular(1)});
}

void check_channels(const OracleSettings& s, std::vector<OracleReport>& out) {
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> radius(0.05, 3.0);
  std::uniform_real_distribution<double> angle(-constants::pi, constants::pi);
  const double waist = s.waist_ratio * s.wavelength;

  Tally gradient("coupling.gradient_vs_fd", tol_finite_difference);
  {
    const LGMode mode(s.wavelength, waist, 2, 1, s.intensity, Polarization::circular(-1));
    for (std::size_t i = 0; i < s.points_per_channel; ++i) {
      const double rb = radius(rng);
      const double phi = angle(rng);
      const Position pos = Position::polar(rb * waist, phi);
      const double h = 1e-6 * waist;
      const double u = amplitude_at(mode, pos.X, pos.Y);
      const auto th = [&](double x, double y) { return phase(mode, {x, y, 0.0}); };
      const complex g_fd =
          (amplitude_at(mode, pos.X + h, pos.Y) - amplitude_at(mode, pos.X - h, pos.Y)) /
              (2.0 * h * u) +
          I * wrap_angle(th(pos.X + h, pos.Y) - th(pos.X - h, pos.Y)) / (2.0 * h);
      const complex h_fd =
          (amplitude_at(mode, pos.X, pos.Y + h) - amplitude_at(mode, pos.X, pos.Y - h)) /
              (2.0 * h * u) +
          I * wrap_angle(th(pos.X, pos.Y + h) - th(pos.X, pos.Y - h)) / (2.0 * h);
      const std::string where = describe({{"rho_bar", rb}, {"phi", phi}});
      gradient.add(relative_difference(field_log_gradient_x(mode, pos), g_fd), where);
      gradient.add(relative_difference(field_log_gradient_y(mode, pos), h_fd), where);
    }
  }
  out.push_back(gradient.finish());

  Tally gating("coupling.polarization_gating", 0.0);
  for (const auto& [dm, sigma] : {std::pair{1, 1}, {-1, -1}, {2, 1}, {-2, -1}}) {
    const int ell = dm - sigma;
    const LGMode mode(s.wavelength, waist, ell, 0, s.intensity, Polarization::circular(sigma));
    const RabiScaling scaling = scaling_factors(mode, s.q_xx_abs, s.q_xz_abs);
    for (double rb : radial_grid(default_grid_start, default_grid_end, default_grid_samples)) {
      const complex w = rabi_channel(Channel::make(dm, ell, sigma), mode, scaling,
                                     {rb * waist, 0.0, 0.0}, s.conv);
      gating.add(std::abs(w), describe({{"delta_m", dm}, {"sigma_z", sigma}, {"rho_bar", rb}}));
    }
  }
  out.push_back(gating.finish());

  for (const Channel& c : all_channels()) {
    Tally closed("coupling.closed_form_vs_general." + channel_label(c), tol_algebraic);
    Tally fd("coupling.general_vs_fd." + channel_label(c), tol_finite_difference);
    for (unsigned p : {0u, 1u}) {
      const LGMode mode(s.wavelength, waist, c.ell, p, s.intensity,
                        Polarization::circular(c.sigma_z));
      const RabiScaling scaling = scaling_factors(mode, s.q_xx_abs, s.q_xz_abs);
      const ModifiedMoments moments =
          channel_moments(c.delta_m, s.q_xx_abs, s.q_xz_abs, mode.polarization());
      for (std::size_t i = 0; i < s.points_per_channel; ++i) {
        const double rb = radius(rng);
        const double phi = angle(rng);
        const Position pos = Position::polar(rb * waist, phi);
        const complex general = rabi_general(mode, moments, pos, s.conv);
        const std::string where = describe({{"p", p}, {"rho_bar", rb}, {"phi", phi}});
        closed.add(relative_difference(rabi_channel(c, mode, scaling, pos, s.conv), general),
                   where);
        fd.add(relative_difference(fd_rabi(mode, moments, pos, 1e-6, s.conv), general), where);
      }
    }
    out.push_back(closed.finish());
    out.push_back(fd.finish());
  }
}

OracleReport check_matrix_elements(const OracleSettings& s) {
  Tally t("atomic.dual_quadrature", tol_dual_quadrature);
  const AtomicLevel lower{6, 0, 0};
  for (int m = -2; m <= 2; ++m) {
    const RadialIntegral r = radial_quadrupole_integral(lower, {5, 2, m}, s.z_eff);
    t.add(r.discrepancy, describe({{"m_upper", m}, {"Z", s.z_eff}}));
  }
  return t.finish();
}

OracleReport check_rate_identity(const OracleSettings& s) {
  Tally t("absorption.rate_lorentzian_consistency", tol_machine);
  const TransitionLine line = cesium_6s_5d(s.wavelength, 3.34e7);
  std::mt19937_64 rng(s.seed + 1);
  std::uniform_real_distribution<double> detune(-50.0, 50.0);
  std::uniform_real_distribution<double> amp(0.0, 1e7);
  for (int i = 0; i < 200; ++i) {
    const complex rabi(amp(rng), amp(rng));
    const double d = detune(rng) * line.gamma;
    const double rate = absorption_rate_detuned(rabi, d, line.gamma);
    const double via_dos = 2.0 * constants::pi * std::norm(rabi) *
                           lorentzian_dos_detuned(d, line.gamma);
    t.add(relative_difference(rate, via_dos), describe({{"detuning_over_gamma", d / line.gamma}}));
  }
  return t.finish();
}

OracleReport check_lorentzian_normalization() {
  Tally t("absorption.lorentzian_normalization", tol_finite_difference);
  const double gamma = 3.34e7;
  const double half_span = 1e3 * gamma;
  // integrate in units of gamma; the tails beyond the window are added analytically
  const double window = quad::integrate_gl_refined(
      [&](double x) { return gamma * lorentzian_dos_detuned(x * gamma, gamma); }, -1e3, 1e3,
      1e-13);
  const double tail = 1.0 - 2.0 / constants::pi * std::atan(2.0 * half_span / gamma);
  t.add(std::abs(window + tail - 1.0), describe({{"half_span_over_gamma", 1e3}}));
  return t.finish();
}

}  // namespace

double relative_difference(complex a, complex b) noexcept {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) {
    return 0.0;
  }
  return std::abs(a - b) / scale;
}

std::string to_json_line(const OracleReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.name;
  j["max_rel_error"] = report.max_rel_error;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["worst_input"] = report.worst_input;
  return j.dump();
}

complex fd_rabi(const LGMode& mode, const ModifiedMoments& moments, const Position& pos,
                double step, Convention conv) {
  if (!(pos.rho_bar(mode) > 10.0 * step)) {
    throw DomainError("finite-difference step too large for a point this close to the axis");
  }
  const double h = step * mode.waist();
  const auto u = [&](const Position& p) { return amplitude_at(mode, p.X, p.Y); };
  const auto th = [&](const Position& p) { return phase(mode, p); };
  const auto shifted = [&](double dx, double dy, double dz) {
    return Position{pos.X + dx, pos.Y + dy, pos.Z + dz};
  };
  const double u0 = u(pos);
  // (du/dR_i + i u dtheta/dR_i) for each axis
  const auto term = [&](double dx, double dy, double dz) {
    const Position fwd = shifted(dx, dy, dz);
    const Position bwd = shifted(-dx, -dy, -dz);
    const double du = (u(fwd) - u(bwd)) / (2.0 * h);
    const double dth = wrap_angle(th(fwd) - th(bwd)) / (2.0 * h);
    return complex(du, u0 * dth);
  };
  const complex sum = term(h, 0.0, 0.0) * moments.q1 + term(0.0, h, 0.0) * moments.q2 +
                      term(0.0, 0.0, h) * moments.q3;
  return prefactor(conv) * constants::quadrupole_unit / constants::hbar * sum;
}

Peak peak_scan(const std::function<double(double)>& profile, double lo, double hi,
               std::size_t n) {
  if (!(lo < hi) || n < 100) {
    throw DomainError("peak scan needs lo < hi and at least 100 grid points");
  }
  const std::vector<double> grid = radial_grid(lo, hi, n);
  std::size_t best = 0;
  double best_value = profile(grid[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = profile(grid[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0 || best == n - 1) {
    return {grid[best], best_value, true};
  }

  // golden-section on the bracketing grid cells
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[best - 1];
  double b = grid[best + 1];
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = profile(c);
  double fd = profile(d);
  while (b - a > 1e-10 * std::max(1.0, std::abs(a))) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = profile(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = profile(d);
    }
  }
  double x = 0.5 * (a + b);

  // Value comparisons cannot resolve the location below ~sqrt(eps); polish it
  // with the zero of a five-point derivative.
  const double step = grid[1] - grid[0];
  const double delta = 0.05 * step;
  const auto slope = [&](double t) {
    return (-profile(t + 2.0 * delta) + 8.0 * profile(t + delta) - 8.0 * profile(t - delta) +
            profile(t - 2.0 * delta)) /
           (12.0 * delta);
  };
  double left = std::max(x - 1e-3 * step, lo + 2.0 * delta);
  double right = std::min(x + 1e-3 * step, hi - 2.0 * delta);
  if (slope(left) > 0.0 && slope(right) < 0.0) {
    for (int iter = 0; iter < 80 && right - left > 1e-15 * std::max(1.0, x); ++iter) {
      const double mid = 0.5 * (left + right);
      if (slope(mid) > 0.0) {
        left = mid;
      } else {
        right = mid;
      }
    }
    x = 0.5 * (left + right);
  }
  return {x, profile(x), false};
}

std::vector<OracleReport> run_oracle_suite(const OracleSettings& settings) {
  std::vector<OracleReport> out;
  out.push_back(check_laguerre_series());
  out.push_back(check_laguerre_derivative());
  out.push_back(check_hydrogenic_normalization());
  out.push_back(check_mode_power(settings));
  out.push_back(check_peak_scan());
  check_channels(settings, out);
  out.push_back(check_matrix_elements(settings));
  out.push_back(check_rate_identity(settings));
  out.push_back(check_lorentzian_normalization());
  std::sort(out.begin(), out.end(),
            [](const OracleReport& a, const OracleReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace vortexq
