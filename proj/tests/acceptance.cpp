// Acceptance suite: one PASS/FAIL line per criterion. Run without arguments
// for the full report, or with --only N for a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vortexq/absorption.hpp"
#include "vortexq/atomic.hpp"
#include "vortexq/beam.hpp"
#include "vortexq/cli/commands.hpp"
#include "vortexq/cli/run_config.hpp"
#include "vortexq/constants.hpp"
#include "vortexq/coupling.hpp"
#include "vortexq/oracle.hpp"
#include "vortexq/quadrature.hpp"

using namespace vortexq;

namespace {

constexpr double lambda = 685e-9;
constexpr double intensity = 4.0e5;
constexpr double gamma_s = 3.34e7;
constexpr double q_round = 10.0;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

LGMode mode_for(int ell, unsigned p, int sigma, double waist_ratio = 5.0) {
  return LGMode(lambda, waist_ratio * lambda, ell, p, intensity, Polarization::circular(sigma));
}

struct ChannelSpec {
  int delta_m;
  int ell;
  int sigma;
};

constexpr ChannelSpec open_channels[] = {
    {0, 1, -1}, {1, 2, -1}, {2, 3, -1}, {0, -1, 1}, {-1, -2, 1}, {-2, -3, 1}};

Outcome scaling_reproduction() {
  const RabiScaling s = scaling_factors(mode_for(2, 0, -1), q_round, q_round);
  const double ratio = s.omega_0 / gamma_s;
  const double err = std::abs(ratio / 3.25e-2 - 1.0);
  return {err <= 0.02, "Omega0/GammaS = " + fmt(ratio) + " vs 3.25e-2, rel err " + fmt(err) +
                           " (tol 0.02)"};
}

Outcome matrix_element_magnitude() {
  const AtomicLevel lower{6, 0, 0};
  const MatrixElement xx =
      quadrupole_matrix_element(lower, {5, 2, 0}, Axis::X, Axis::X, cesium_effective_charge);
  double discrepancy = xx.discrepancy;
  double xz_abs = 0.0;
  for (int m : {-1, 1}) {
    const MatrixElement xz =
        quadrupole_matrix_element(lower, {5, 2, m}, Axis::X, Axis::Z, cesium_effective_charge);
    discrepancy = std::max(discrepancy, xz.discrepancy);
    xz_abs = std::abs(xz.value);
  }
  const double xx_abs = std::abs(xx.value);
  const auto within_factor_two = [](double q) { return q >= q_round / 2 && q <= q_round * 2; };
  const bool magnitude_ok = within_factor_two(xx_abs) && within_factor_two(xz_abs);
  const bool dual_ok = discrepancy <= 1e-8;
  return {magnitude_ok && dual_ok,
          "|Q_xx| = " + fmt(xx_abs) + ", |Q_xz| = " + fmt(xz_abs) +
              " e*a0^2 (need [5, 20]: " + (magnitude_ok ? "ok" : "no") +
              "); dual-scheme discrepancy " + fmt(discrepancy) + " (tol 1e-8: " +
              (dual_ok ? "ok" : "no") + ")"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> radius(0.05, 3.0);
  std::uniform_real_distribution<double> angle(-constants::pi, constants::pi);
  double worst_closed = 0.0;
  double worst_fd = 0.0;
  for (const auto& c : open_channels) {
    const LGMode mode = mode_for(c.ell, 0, c.sigma);
    const RabiScaling s = scaling_factors(mode, q_round, q_round);
    const ModifiedMoments q = channel_moments(c.delta_m, q_round, q_round, mode.polarization());
    const Channel ch = Channel::make(c.delta_m, c.ell, c.sigma);
    for (int i = 0; i < 100; ++i) {
      const Position pos = Position::polar(radius(rng) * mode.waist(), angle(rng));
      const complex general = rabi_general(mode, q, pos);
      worst_closed = std::max(worst_closed, relative_difference(rabi_channel(ch, mode, s, pos), general));
      worst_fd = std::max(worst_fd, relative_difference(fd_rabi(mode, q, pos), general));
    }
  }
  return {worst_closed <= 1e-10 && worst_fd <= 1e-6,
          "closed vs general max " + fmt(worst_closed) + " (tol 1e-10); general vs FD max " +
              fmt(worst_fd) + " (tol 1e-6); 6 channels x 100 points"};
}

Outcome mode_power() {
  double worst = 0.0;
  for (int ell = 0; ell <= 5; ++ell) {
    for (unsigned p = 0; p <= 3; ++p) {
      const LGMode mode = mode_for(ell, p, -1);
      const double expected = constants::pi * mode.waist() * mode.waist() / 2.0;
      worst = std::max(worst, std::abs(mode_power_integral(mode) / expected - 1.0));
    }
  }
  return {worst <= 1e-9, "max rel deviation from pi w0^2/2 = " + fmt(worst) + " (tol 1e-9)"};
}

Peak channel_peak(const ChannelSpec& c, double waist_ratio) {
  const LGMode mode = mode_for(c.ell, 0, c.sigma, waist_ratio);
  const RabiScaling s = scaling_factors(mode, q_round, q_round);
  const Channel ch = Channel::make(c.delta_m, c.ell, c.sigma);
  const Peak p = peak_scan(
      [&](double rb) {
        return std::abs(rabi_channel(ch, mode, s, Position::polar(rb * mode.waist(), 0.0))) /
               s.omega_0;
      },
      1e-6, 4.0, 1000);
  return {p.location * waist_ratio, p.value, p.at_endpoint};  // abscissa in rho / lambda
}

Outcome peak_laws() {
  const Peak a = channel_peak({1, 2, -1}, 5.0);
  const Peak b = channel_peak({1, 2, -1}, 8.0);
  const double ordinate = std::abs(a.value - b.value) / a.value;
  const double shift = std::abs(b.location / a.location - 8.0 / 5.0) / (8.0 / 5.0);
  const bool oam_ok = ordinate <= 1e-9 && shift <= 1e-12 && !a.at_endpoint && !b.at_endpoint;
  const Peak n5 = channel_peak({0, 1, -1}, 5.0);
  const Peak n8 = channel_peak({0, 1, -1}, 8.0);
  const Peak t5 = channel_peak({2, 3, -1}, 5.0);
  const Peak t8 = channel_peak({2, 3, -1}, 8.0);
  const bool decrease_ok = n8.value < n5.value && t8.value < t5.value;
  return {oam_ok && decrease_ok,
          "dm=+1 peak " + fmt(a.value) + " at rho/lambda " + fmt(a.location) + " -> " +
              fmt(b.value) + " at " + fmt(b.location) + " (ordinate rel diff " + fmt(ordinate) +
              ", abscissa ratio err " + fmt(shift) + "); dm=0 peak " + fmt(n5.value) + " -> " +
              fmt(n8.value) + "; dm=+2 peak " + fmt(t5.value) + " -> " + fmt(t8.value)};
}

Outcome polarization_gating() {
  const ChannelSpec gated[] = {{1, 2, 1}, {-1, -2, -1}, {2, 3, 1}, {-2, -3, -1}};
  const std::vector<double> grid = radial_grid(1e-6, 4.0, 1000);
  double worst = 0.0;
  for (const auto& g : gated) {
    // ell chosen so that TAM balances: ell = delta_m - sigma_z.
    const int ell = g.delta_m - g.sigma;
    const LGMode mode = mode_for(ell, 0, g.sigma);
    const RabiScaling s = scaling_factors(mode, q_round, q_round);
    for (const complex v : rabi_profile(Channel::make(g.delta_m, ell, g.sigma), mode, s, grid)) {
      worst = std::max(worst, std::abs(v));
    }
  }
  return {worst == 0.0, "max |Omega| over 4 gated channels x 1000 points = " + fmt(worst)};
}

double peak_resonant_rate(int delta_m, int ell) {
  cli::RunConfig c;
  c.delta_m = delta_m;
  c.ell = ell;
  const cli::ResolvedMoments q = cli::resolve_moments(c);
  const LGMode mode = mode_for(ell, 0, c.sigma_z, c.waist_over_lambda);
  const auto rows = rate_profile(mode, Channel::make(delta_m, ell, c.sigma_z),
                                 cesium_6s_5d(lambda, c.gamma_s_per_s),
                                 scaling_factors(mode, q.q_xx, q.q_xz),
                                 radial_grid(1e-6, c.rho_max_over_waist, c.samples),
                                 DetuningSpec::resonant(), c.convention);
  double best = 0.0;
  for (const auto& r : rows) {
    best = std::max(best, r.rate_over_gamma);
  }
  return best;
}

Outcome channel_dominance() {
  const double oam = peak_resonant_rate(1, 2);
  const double none = peak_resonant_rate(0, 1);
  const double tam = peak_resonant_rate(2, 3);
  const double margin = std::min(oam / none, oam / tam);
  return {margin >= 10.0, "peak rate/GammaS: dm=+1 " + fmt(oam) + ", dm=0 " + fmt(none) +
                              ", dm=+2 " + fmt(tam) + "; smallest ratio " + fmt(margin) +
                              " (need >= 10)"};
}

Outcome rate_identities() {
  const LGMode mode = mode_for(2, 0, -1);
  const RabiScaling s = scaling_factors(mode, q_round, q_round);
  const auto rabi = rabi_profile(Channel::make(1, 2, -1), mode, s, radial_grid(1e-6, 4.0, 1000));
  double worst_resonant = 0.0;
  double worst_half = 0.0;
  for (const complex w : rabi) {
    const double resonant = absorption_rate_detuned(w, 0.0, gamma_s);
    const double expected = 4.0 * std::norm(w) / gamma_s;
    if (expected > 0.0) {
      worst_resonant = std::max(worst_resonant, std::abs(resonant - expected) / expected);
      const double half = absorption_rate_detuned(w, 0.5 * gamma_s, gamma_s);
      worst_half = std::max(worst_half, std::abs(half - 0.5 * resonant) / resonant);
    }
  }
  const double span = 1e3 * gamma_s;
  const double window = quad::integrate_gl_refined(
      [](double d) { return lorentzian_dos_detuned(d, gamma_s); }, -span, span, 1e-12);
  const double tail = 1.0 - 2.0 / constants::pi * std::atan(2.0 * span / gamma_s);
  const double norm_err = std::abs(window + tail - 1.0);
  constexpr double machine = 4.0 * std::numeric_limits<double>::epsilon();
  return {worst_resonant <= machine && worst_half <= machine && norm_err <= 1e-6,
          "resonant vs 4|Omega|^2/gamma " + fmt(worst_resonant) + ", half-width ratio " +
              fmt(worst_half) + " (tol " + fmt(machine) + "); Lorentzian integral - 1 = " +
              fmt(norm_err) + " (tol 1e-6)"};
}

Outcome golden_rule_validity() {
  std::size_t flagged = 0;
  std::size_t total = 0;
  double max_ratio = 0.0;
  for (const auto& c : open_channels) {
    cli::RunConfig cfg;
    cfg.delta_m = c.delta_m;
    cfg.ell = c.ell;
    cfg.sigma_z = c.sigma;
    const cli::ResolvedMoments q = cli::resolve_moments(cfg);
    const LGMode mode = mode_for(c.ell, 0, c.sigma, cfg.waist_over_lambda);
    const auto rows = rate_profile(mode, Channel::make(c.delta_m, c.ell, c.sigma),
                                   cesium_6s_5d(lambda, cfg.gamma_s_per_s),
                                   scaling_factors(mode, q.q_xx, q.q_xz),
                                   radial_grid(1e-6, cfg.rho_max_over_waist, cfg.samples),
                                   DetuningSpec::resonant(), cfg.convention);
    for (const auto& r : rows) {
      ++total;
      flagged += r.validity != Validity::GoldenRuleOk;
      max_ratio = std::max(max_ratio, r.rabi_abs / cfg.gamma_s_per_s);
    }
  }
  return {flagged == 0, std::to_string(total - flagged) + "/" + std::to_string(total) +
                            " samples GoldenRuleOk; max |Omega|/GammaS = " + fmt(max_ratio)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "scaling-factor reproduction", 1.0, scaling_reproduction},
      {2, "matrix-element magnitude", 10.0, matrix_element_magnitude},
      {3, "oracle equivalence", 5.0, oracle_equivalence},
      {4, "mode-power invariance", 5.0, mode_power},
      {5, "peak laws", 0.0, peak_laws},
      {6, "polarization gating", 0.0, polarization_gating},
      {7, "channel dominance", 0.0, channel_dominance},
      {8, "rate identities", 0.0, rate_identities},
      {9, "golden-rule validity", 0.0, golden_rule_validity},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = "runtime " + fmt(seconds) + " s";
    if (c.time_limit_s > 0.0) {
      timing += " (limit " + fmt(c.time_limit_s) + " s)";
      o.pass = o.pass && seconds < c.time_limit_s;
    }
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
              << ": " << o.detail << "; " << timing << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
