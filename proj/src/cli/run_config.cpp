#include "vortexq/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vortexq/errors.hpp"

namespace vortexq::cli {
namespace {

constexpr std::string_view compute_token = "compute";
constexpr std::string_view direct_token = "paper-eq12";
constexpr std::string_view hamiltonian_token = "hamiltonian-eq5p";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'");
  }
  return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
  long long value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  }
  return value;
}

double positive(const std::string& key, double value) {
  if (!(value > 0.0)) {
    throw ConfigError(key + ": must be strictly positive");
  }
  return value;
}

std::optional<double> moment_setting(const std::string& key, const std::string& text) {
  if (text == compute_token) {
    return std::nullopt;
  }
  return positive(key, parse_double(key, text));
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "wavelength_nm",       "intensity_W_per_m2", "gamma_s_per_s",   "q_xx_ea02",
      "q_xz_ea02",           "z_eff",              "waist_over_lambda", "ell",
      "p",                   "delta_m",            "sigma_z",         "detuning_over_gamma",
      "rho_max_over_waist",  "samples",            "convention"};
  return keys;
}

std::string flag_name(const std::string& key) {
  std::string out = key;
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

std::string_view convention_name(Convention conv) noexcept {
  return conv == Convention::Hamiltonian ? hamiltonian_token : direct_token;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  const auto& keys = config_keys();
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
    out[key] = trim(std::string_view(body).substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

RunConfig resolve_config(const std::map<std::string, std::string>& values) {
  RunConfig c;
  const auto& keys = config_keys();
  for (const auto& [key, raw] : values) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("unknown configuration key '" + key + "'");
    }
    const std::string text = trim(raw);
    if (key == "wavelength_nm") {
      c.wavelength_nm = positive(key, parse_double(key, text));
    } else if (key == "intensity_W_per_m2") {
      c.intensity_W_per_m2 = positive(key, parse_double(key, text));
    } else if (key == "gamma_s_per_s") {
      c.gamma_s_per_s = positive(key, parse_double(key, text));
    } else if (key == "q_xx_ea02") {
      c.q_xx_ea02 = moment_setting(key, text);
    } else if (key == "q_xz_ea02") {
      c.q_xz_ea02 = moment_setting(key, text);
    } else if (key == "z_eff") {
      c.z_eff = positive(key, parse_double(key, text));
    } else if (key == "waist_over_lambda") {
      c.waist_over_lambda = positive(key, parse_double(key, text));
    } else if (key == "ell") {
      c.ell = static_cast<int>(parse_integer(key, text));
    } else if (key == "p") {
      const long long p = parse_integer(key, text);
      if (p < 0 || p > 1000) {
        throw ConfigError("p: radial index must be in [0, 1000]");
      }
      c.p = static_cast<int>(p);
    } else if (key == "delta_m") {
      c.delta_m = static_cast<int>(parse_integer(key, text));
    } else if (key == "sigma_z") {
      c.sigma_z = static_cast<int>(parse_integer(key, text));
    } else if (key == "detuning_over_gamma") {
      c.detuning_over_gamma = parse_double(key, text);
    } else if (key == "rho_max_over_waist") {
      c.rho_max_over_waist = parse_double(key, text);
      if (!(c.rho_max_over_waist > 1e-6)) {
        throw ConfigError("rho_max_over_waist: must exceed the grid start 1e-6");
      }
    } else if (key == "samples") {
      const long long n = parse_integer(key, text);
      if (n < 2) {
        throw ConfigError("samples: need at least 2");
      }
      c.samples = static_cast<std::size_t>(n);
    } else if (key == "convention") {
      if (text == direct_token) {
        c.convention = Convention::Direct;
      } else if (text == hamiltonian_token) {
        c.convention = Convention::Hamiltonian;
      } else {
        throw ConfigError("convention: expected '" + std::string(direct_token) + "' or '" +
                          std::string(hamiltonian_token) + "', got '" + text + "'");
      }
    }
  }
  if (c.sigma_z != 1 && c.sigma_z != -1) {
    throw SelectionRuleError("circular-polarization",
                             "sigma_z must be +1 or -1 (linear polarization is out of scope), got " +
                                 std::to_string(c.sigma_z));
  }
  return c;
}

std::string format_exact(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string format_sig9(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

KeyValues effective_config(const RunConfig& c) {
  const auto moment = [](const std::optional<double>& q) {
    return q ? format_exact(*q) : std::string(compute_token);
  };
  return {
      {"wavelength_nm", format_exact(c.wavelength_nm)},
      {"intensity_W_per_m2", format_exact(c.intensity_W_per_m2)},
      {"gamma_s_per_s", format_exact(c.gamma_s_per_s)},
      {"q_xx_ea02", moment(c.q_xx_ea02)},
      {"q_xz_ea02", moment(c.q_xz_ea02)},
      {"z_eff", format_exact(c.z_eff)},
      {"waist_over_lambda", format_exact(c.waist_over_lambda)},
      {"ell", std::to_string(c.ell)},
      {"p", std::to_string(c.p)},
      {"delta_m", std::to_string(c.delta_m)},
      {"sigma_z", std::to_string(c.sigma_z)},
      {"detuning_over_gamma", format_exact(c.detuning_over_gamma)},
      {"rho_max_over_waist", format_exact(c.rho_max_over_waist)},
      {"samples", std::to_string(c.samples)},
      {"convention", std::string(convention_name(c.convention))},
  };
}

}  // namespace vortexq::cli
