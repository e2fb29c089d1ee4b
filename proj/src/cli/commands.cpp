#include "vortexq/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "vortexq/absorption.hpp"
#include "vortexq/atomic.hpp"
#include "vortexq/beam.hpp"
#include "vortexq/coupling.hpp"
#include "vortexq/errors.hpp"
#include "vortexq/oracle.hpp"

namespace vortexq::cli {
namespace {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  KeyValues meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

constexpr double grid_start = 1e-6;

double rounded(double v) {
  const std::string s = format_sig9(v);
  double out = v;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& [k, v] : t.meta) {
    out << "# " << k << '=' << v << '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out << ',';
      }
      std::visit(
          [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_sig9(v);
            } else if constexpr (std::is_same_v<T, long long>) {
              out << v;
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) {
    doc["meta"][k] = v;
  }
  doc["columns"] = t.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      std::visit(
          [&r](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              r.push_back(rounded(v));
            } else {
              r.push_back(v);
            }
          },
          cell);
    }
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

int emit(const Table& t, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    write_json(t, out);
  } else {
    write_csv(t, out);
  }
  return 0;
}

int sign(int v) { return (v > 0) - (v < 0); }

TransitionLine line_for(const RunConfig& c, int m_upper = 0) {
  return cesium_6s_5d(c.wavelength_nm * 1e-9, c.gamma_s_per_s, m_upper);
}

LGMode mode_for(const RunConfig& c) {
  const double wavelength = c.wavelength_nm * 1e-9;
  return LGMode(wavelength, c.waist_over_lambda * wavelength, c.ell,
                static_cast<unsigned>(c.p), c.intensity_W_per_m2,
                Polarization::circular(c.sigma_z));
}

double tensor_component(const RunConfig& c, int m_upper, Axis a, Axis b) {
  const TransitionLine line = line_for(c, m_upper);
  return std::abs(quadrupole_matrix_element(line.lower, line.upper, a, b, c.z_eff).value);
}

KeyValues header(const RunConfig& c, const ResolvedMoments* q = nullptr,
                 const RabiScaling* s = nullptr) {
  KeyValues meta = effective_config(c);
  if (q) {
    meta.emplace_back("resolved_q_xx_ea02", format_sig9(q->q_xx));
    meta.emplace_back("resolved_q_xz_ea02", format_sig9(q->q_xz));
  }
  if (s) {
    meta.emplace_back("omega0_per_s", format_sig9(s->omega_0));
    meta.emplace_back("omega0_over_gamma", format_sig9(s->omega_0 / c.gamma_s_per_s));
  }
  return meta;
}

struct Profile {
  Channel channel;
  LGMode mode;
  ResolvedMoments moments;
  RabiScaling scaling;
  std::vector<double> grid;
};

Profile prepare_profile(const RunConfig& c) {
  const Channel channel = check_channel(line_for(c), c.delta_m, c.ell, c.sigma_z);
  const LGMode mode = mode_for(c);
  const ResolvedMoments q = resolve_moments(c);
  return {channel, mode, q, scaling_factors(mode, q.q_xx, q.q_xz),
          radial_grid(grid_start, c.rho_max_over_waist, c.samples)};
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") {
    return OutputFormat::Csv;
  }
  if (text == "json") {
    return OutputFormat::Json;
  }
  throw ConfigError("format: expected 'csv' or 'json', got '" + text + "'");
}

ResolvedMoments resolve_moments(const RunConfig& c) {
  ResolvedMoments out{0.0, 0.0, false};
  if (c.q_xx_ea02) {
    out.q_xx = *c.q_xx_ea02;
  } else {
    const int m = c.delta_m == 0 ? 0 : 2 * sign(c.delta_m);
    out.q_xx = tensor_component(c, m, Axis::X, Axis::X);
    out.computed = true;
  }
  if (c.q_xz_ea02) {
    out.q_xz = *c.q_xz_ea02;
  } else {
    const int m = c.delta_m == 0 ? 1 : sign(c.delta_m);
    out.q_xz = tensor_component(c, m, Axis::X, Axis::Z);
    out.computed = true;
  }
  return out;
}

int cmd_matrix_elements(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const Polarization pol = Polarization::circular(c.sigma_z);
  Table t;
  t.meta = header(c);
  t.columns = {"delta_m"};
  static constexpr std::pair<Axis, Axis> components[] = {
      {Axis::X, Axis::X}, {Axis::Y, Axis::Y}, {Axis::Z, Axis::Z},
      {Axis::X, Axis::Y}, {Axis::X, Axis::Z}, {Axis::Y, Axis::Z}};
  for (const auto& [a, b] : components) {
    const std::string name = std::string("q_") + axis_name(a) + axis_name(b);
    t.columns.push_back(name + "_re");
    t.columns.push_back(name + "_im");
  }
  for (const char* m : {"mq1", "mq2", "mq3"}) {
    t.columns.push_back(std::string(m) + "_re");
    t.columns.push_back(std::string(m) + "_im");
  }
  t.columns.insert(t.columns.end(), {"gating", "gate_abs", "radial_discrepancy"});

  for (int dm = -2; dm <= 2; ++dm) {
    const TransitionLine line = line_for(c, dm);
    const TensorResult r = quadrupole_tensor(line.lower, line.upper, c.z_eff);
    const double floor = 1e-12 * r.tensor.max_abs();
    const auto flush = [floor](double v) { return std::abs(v) < floor ? 0.0 : v; };
    std::vector<Cell> row{static_cast<long long>(dm)};
    for (const auto& [a, b] : components) {
      row.emplace_back(flush(r.tensor(a, b).real()));
      row.emplace_back(flush(r.tensor(a, b).imag()));
    }
    const ModifiedMoments mm = modified_moments(r.tensor, pol);
    for (const complex q : {mm.q1, mm.q2, mm.q3}) {
      row.emplace_back(flush(q.real()));
      row.emplace_back(flush(q.imag()));
    }
    const Channel ch = Channel::make(dm, dm - c.sigma_z, c.sigma_z);
    const double gate = dm > 0   ? std::abs(pol.plus_factor())
                        : dm < 0 ? std::abs(pol.minus_factor())
                                 : 1.0;
    row.emplace_back(std::string(gating_factor_name(ch)));
    row.emplace_back(gate < 1e-12 ? 0.0 : gate);
    row.emplace_back(r.discrepancy);
    t.rows.push_back(std::move(row));
  }
  return emit(t, format, out);
}

int cmd_rabi(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const Profile pr = prepare_profile(c);
  const std::vector<complex> rabi =
      rabi_profile(pr.channel, pr.mode, pr.scaling, pr.grid, c.convention);
  Table t;
  t.meta = header(c, &pr.moments, &pr.scaling);
  t.columns = {"rho_over_wavelength", "omega_over_omega0"};
  for (std::size_t i = 0; i < pr.grid.size(); ++i) {
    t.rows.push_back({pr.grid[i] * pr.scaling.xi, std::abs(rabi[i]) / pr.scaling.omega_0});
  }
  return emit(t, format, out);
}

int cmd_rate(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const Profile pr = prepare_profile(c);
  const TransitionLine line = line_for(c);
  const auto results =
      rate_profile(pr.mode, pr.channel, line, pr.scaling, pr.grid,
                   DetuningSpec::from_detuning_over_gamma(c.detuning_over_gamma), c.convention);
  Table t;
  t.meta = header(c, &pr.moments, &pr.scaling);
  t.columns = {"rho_over_wavelength", "rate_over_gammaS", "validity_flag"};
  for (const auto& r : results) {
    t.rows.push_back({r.rho_bar * pr.scaling.xi, r.rate_over_gamma,
                      std::string(to_string(r.validity))});
  }
  return emit(t, format, out);
}

int cmd_channels(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const auto channels =
      allowed_channels(line_for(c), {Polarization::circular(c.sigma_z)});
  Table t;
  t.meta = header(c);
  t.columns = {"delta_m", "ell", "sigma_z", "kind", "gating", "dominant"};
  for (const Channel& ch : channels) {
    t.rows.push_back({static_cast<long long>(ch.delta_m), static_cast<long long>(ch.ell),
                      static_cast<long long>(ch.sigma_z), std::string(to_string(ch.kind)),
                      std::string(gating_factor_name(ch)),
                      std::string(is_dominant(ch) ? "true" : "false")});
  }
  return emit(t, format, out);
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  const ResolvedMoments q = resolve_moments(c);
  OracleSettings s;
  s.wavelength = c.wavelength_nm * 1e-9;
  s.waist_ratio = c.waist_over_lambda;
  s.intensity = c.intensity_W_per_m2;
  s.z_eff = c.z_eff;
  s.q_xx_abs = q.q_xx;
  s.q_xz_abs = q.q_xz;
  s.conv = c.convention;
  bool all_pass = true;
  for (const OracleReport& r : run_oracle_suite(s)) {
    out << to_json_line(r) << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 3;
}

}  // namespace vortexq::cli
