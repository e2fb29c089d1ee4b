#pragma once

// Run configuration for the command-line tool. Values come from built-in
// defaults, then a flat key=value file, then command-line flags; each layer
// overrides the previous one. The effective configuration is echoed verbatim
// into every output file.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vortexq/coupling.hpp"

namespace vortexq::cli {

struct RunConfig {
  double wavelength_nm = 685.0;
  double intensity_W_per_m2 = 4.0e5;
  double gamma_s_per_s = 3.34e7;
  std::optional<double> q_xx_ea02;  // empty: compute by quadrature
  std::optional<double> q_xz_ea02;
  double z_eff = 8.56;
  double waist_over_lambda = 5.0;
  int ell = 2;
  int p = 0;
  int delta_m = 1;
  int sigma_z = -1;
  double detuning_over_gamma = 0.0;
  double rho_max_over_waist = 4.0;
  std::size_t samples = 1000;
  Convention convention = Convention::Direct;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Configuration keys in canonical (output) order.
const std::vector<std::string>& config_keys();

/// "waist_over_lambda" -> "waist-over-lambda".
std::string flag_name(const std::string& key);

/// Parses a key=value file ('#' starts a comment). Throws ConfigError on
/// unreadable files, malformed lines and unknown keys.
std::map<std::string, std::string> read_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Applies `values` on top of the defaults and validates the result.
/// Throws ConfigError naming the offending key.
RunConfig resolve_config(const std::map<std::string, std::string>& values);

/// Canonical key=value strings for every key, in config_keys() order.
KeyValues effective_config(const RunConfig& config);

/// Shortest round-trip decimal form, locale independent.
std::string format_exact(double value);
/// Nine significant digits, locale independent.
std::string format_sig9(double value);

std::string_view convention_name(Convention conv) noexcept;

}  // namespace vortexq::cli
