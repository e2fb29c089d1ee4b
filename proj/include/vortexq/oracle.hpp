#pragma once

// Brute-force validators for the closed forms: finite-difference gradients,
// dual-scheme quadrature, grid peak finding, and the suite that strings them
// together for the `validate` subcommand.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vortexq/atomic.hpp"
#include "vortexq/beam.hpp"
#include "vortexq/coupling.hpp"
#include "vortexq/dual_quadrature.hpp"

namespace vortexq {

struct OracleReport {
  std::string name;
  double max_rel_error = 0.0;
  std::string worst_input;
  double tolerance = 0.0;
  bool pass = true;
};

/// One JSON object, no trailing newline.
std::string to_json_line(const OracleReport& report);

/// Rabi frequency from central differences of the field amplitude and phase
/// (step h in units of w0) contracted with the moments. Throws DomainError
/// when rho_bar <= 10 h.
complex fd_rabi(const LGMode& mode, const ModifiedMoments& moments, const Position& pos,
                double step = 1e-6, Convention conv = Convention::Direct);

struct Peak {
  double location;
  double value;
  bool at_endpoint;  // no interior maximum on the scanned interval
};

/// Grid scan with n points, golden-section refinement around the best grid
/// point, then bisection on the sign of a five-point derivative. The first
/// maximum from `lo` wins ties. Throws DomainError unless lo < hi and n >= 100.
Peak peak_scan(const std::function<double(double)>& profile, double lo, double hi,
               std::size_t n = 1000);

/// Relative difference |a - b| / max(|a|, |b|), zero when both vanish.
double relative_difference(complex a, complex b) noexcept;

struct OracleSettings {
  double wavelength = 685e-9;
  double waist_ratio = 5.0;
  double intensity = 4.0e5;
  double z_eff = cesium_effective_charge;
  double q_xx_abs = 10.0;
  double q_xz_abs = 10.0;
  Convention conv = Convention::Direct;
  std::uint64_t seed = 20211;
  std::size_t points_per_channel = 100;
};

/// Runs every check; reports are sorted by name.
std::vector<OracleReport> run_oracle_suite(const OracleSettings& settings);

}  // namespace vortexq
