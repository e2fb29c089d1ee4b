#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "vortexq/cli/commands.hpp"
#include "vortexq/cli/run_config.hpp"
#include "vortexq/errors.hpp"

using namespace vortexq;
using namespace vortexq::cli;

namespace {

struct Csv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) {
        return i;
      }
    }
    throw std::runtime_error("no column " + name);
  }
  std::vector<double> numbers(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    for (const auto& r : rows) {
      out.push_back(std::stod(r[c]));
    }
    return out;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  bool have_header = false;
  for (const std::string& line : split(text, '\n')) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      csv.meta[line.substr(2, eq - 2)] = line.substr(eq + 1);
    } else if (!have_header) {
      csv.columns = split(line, ',');
      have_header = true;
    } else {
      csv.rows.push_back(split(line, ','));
    }
  }
  return csv;
}

RunConfig config(std::map<std::string, std::string> values = {}) {
  values.emplace("q_xx_ea02", "10");
  values.emplace("q_xz_ea02", "10");
  return resolve_config(values);
}

std::string run(int (*cmd)(const RunConfig&, OutputFormat, std::ostream&), const RunConfig& c,
                OutputFormat format = OutputFormat::Csv) {
  std::ostringstream out;
  EXPECT_EQ(cmd(c, format, out), 0);
  return out.str();
}

struct ToolResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ToolResult tool(const std::string& args) {
  const std::string dir = ::testing::TempDir();
  const std::string out = dir + "vortexq_cli_out.txt";
  const std::string err = dir + "vortexq_cli_err.txt";
  const std::string command =
      std::string(VORTEXQ_TOOL) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(command.c_str());
  return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

std::size_t argmax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) {
      best = i;
    }
  }
  return best;
}

}  // namespace

TEST(RunConfig, DefaultsAndKeys) {
  const RunConfig c = resolve_config({});
  EXPECT_EQ(c.wavelength_nm, 685.0);
  EXPECT_EQ(c.intensity_W_per_m2, 4.0e5);
  EXPECT_EQ(c.gamma_s_per_s, 3.34e7);
  EXPECT_FALSE(c.q_xx_ea02.has_value());
  EXPECT_EQ(c.samples, 1000u);
  EXPECT_EQ(c.convention, Convention::Direct);
  const KeyValues kv = effective_config(c);
  ASSERT_EQ(kv.size(), config_keys().size());
  for (std::size_t i = 0; i < kv.size(); ++i) {
    EXPECT_EQ(kv[i].first, config_keys()[i]);
  }
}

TEST(RunConfig, ParsesFileSyntax) {
  const auto values = parse_config_text(
      "# comment\n\n  waist_over_lambda = 8  # trailing\nconvention=hamiltonian-eq5p\r\n");
  EXPECT_EQ(values.at("waist_over_lambda"), "8");
  const RunConfig c = resolve_config(values);
  EXPECT_EQ(c.waist_over_lambda, 8.0);
  EXPECT_EQ(c.convention, Convention::Hamiltonian);
  EXPECT_THROW(parse_config_text("bogus_key=1\n"), ConfigError);
  EXPECT_THROW(parse_config_text("no equals sign\n"), ConfigError);
}

TEST(RunConfig, RejectsInvalidValues) {
  EXPECT_THROW(resolve_config({{"q_xx_ea02", "-1"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"wavelength_nm", "0"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"samples", "1"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"ell", "2.5"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"convention", "other"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"intensity_W_per_m2", "nan"}}), ConfigError);
  EXPECT_THROW(resolve_config({{"sigma_z", "0"}}), SelectionRuleError);
}

TEST(CsvOutput, LayoutAndDeterminism) {
  const RunConfig c = config();
  const std::string a = run(cmd_rabi, c);
  const std::string b = run(cmd_rabi, c);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find('\r'), std::string::npos);
  EXPECT_EQ(a.back(), '\n');
  const Csv csv = parse_csv(a);
  for (const std::string& key : config_keys()) {
    EXPECT_TRUE(csv.meta.count(key)) << key;
  }
  EXPECT_EQ(csv.columns, (std::vector<std::string>{"rho_over_wavelength", "omega_over_omega0"}));
  EXPECT_EQ(csv.rows.size(), 1000u);
  EXPECT_EQ(csv.rows[1][0], "0.020025015");  // nine significant digits
}

TEST(CsvOutput, AbscissaInWavelengths) {
  const Csv csv = parse_csv(run(cmd_rabi, config({{"waist_over_lambda", "8"}})));
  EXPECT_DOUBLE_EQ(csv.numbers("rho_over_wavelength").back(), 32.0);
}

TEST(JsonOutput, MirrorsCsv) {
  const RunConfig c = config({{"samples", "50"}});
  const auto doc = nlohmann::json::parse(run(cmd_rate, c, OutputFormat::Json));
  const Csv csv = parse_csv(run(cmd_rate, c));
  EXPECT_EQ(doc["meta"]["samples"], "50");
  ASSERT_EQ(doc["rows"].size(), 50u);
  EXPECT_EQ(doc["columns"][2], "validity_flag");
  const auto rates = csv.numbers("rate_over_gammaS");
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(doc["rows"][i][1].get<double>(), rates[i]);
    EXPECT_EQ(doc["rows"][i][2], "GoldenRuleOk");
  }
}

TEST(Rabi, OamPeakAtUnitRhoBarAndWaistInvariant) {
  const Csv narrow = parse_csv(run(cmd_rabi, config()));
  const Csv wide = parse_csv(run(cmd_rabi, config({{"waist_over_lambda", "8"}})));
  const auto yn = narrow.numbers("omega_over_omega0");
  const auto yw = wide.numbers("omega_over_omega0");
  const std::size_t in = argmax(yn);
  const std::size_t iw = argmax(yw);
  EXPECT_EQ(yn[in], yw[iw]);
  EXPECT_NEAR(narrow.numbers("rho_over_wavelength")[in] / 5.0, 1.0, 4.0 / 999);
  EXPECT_GT(wide.numbers("rho_over_wavelength")[iw], narrow.numbers("rho_over_wavelength")[in]);
}

TEST(Rabi, NoOamP1HasTwoInteriorZeros) {
  const Csv csv = parse_csv(run(cmd_rabi, config({{"delta_m", "0"}, {"ell", "1"}, {"p", "1"}})));
  const auto y = csv.numbers("omega_over_omega0");
  const auto x = csv.numbers("rho_over_wavelength");
  const double top = y[argmax(y)];
  std::vector<double> zeros;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] < y[i - 1] && y[i] <= y[i + 1] && y[i] < 1e-2 * top) {
      zeros.push_back(x[i] / 5.0);
    }
  }
  ASSERT_EQ(zeros.size(), 2u);
  EXPECT_NEAR(zeros[0], (std::sqrt(5.0) - 1) / 2, 4e-3);
  EXPECT_NEAR(zeros[1], (std::sqrt(5.0) + 1) / 2, 4e-3);
}

TEST(Rate, DetunedRowsAreHalfTheResonantOnes) {
  const auto resonant = parse_csv(run(cmd_rate, config())).numbers("rate_over_gammaS");
  const auto detuned =
      parse_csv(run(cmd_rate, config({{"detuning_over_gamma", "0.5"}}))).numbers("rate_over_gammaS");
  ASSERT_EQ(resonant.size(), detuned.size());
  for (std::size_t i = 0; i < resonant.size(); ++i) {
    // exact before printing; each side carries up to 5e-9 relative rounding
    EXPECT_NEAR(detuned[i], 0.5 * resonant[i], 1e-8 * resonant[i]);
  }
}

TEST(Rate, PeakMatchesResonanceFormulaOnRabiPeak) {
  const Csv rabi = parse_csv(run(cmd_rabi, config()));
  const Csv rate = parse_csv(run(cmd_rate, config()));
  const auto omega = rabi.numbers("omega_over_omega0");
  const auto r = rate.numbers("rate_over_gammaS");
  const double w0_over_gamma = std::stod(rabi.meta.at("omega0_over_gamma"));
  const double peak_omega = omega[argmax(omega)] * w0_over_gamma;
  EXPECT_NEAR(r[argmax(r)], 4.0 * peak_omega * peak_omega, 1e-7 * r[argmax(r)]);
  for (const auto& row : rate.rows) {
    EXPECT_EQ(row[2], "GoldenRuleOk");
  }
}

TEST(Rate, GridRefinementConverges) {
  const auto coarse = parse_csv(run(cmd_rate, config())).numbers("rate_over_gammaS");
  const auto fine =
      parse_csv(run(cmd_rate, config({{"samples", "2000"}}))).numbers("rate_over_gammaS");
  const double a = coarse[argmax(coarse)];
  const double b = fine[argmax(fine)];
  EXPECT_LE(std::abs(a - b) / b, 1e-3);
}

TEST(MatrixElements, CaseRowsAndGating) {
  const Csv minus = parse_csv(run(cmd_matrix_elements, resolve_config({})));
  ASSERT_EQ(minus.rows.size(), 5u);
  const auto dm = minus.numbers("delta_m");
  const auto q1 = minus.numbers("mq1_re");
  const auto q2i = minus.numbers("mq2_im");
  const auto q3r = minus.numbers("mq3_re");
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (dm[i] == 1) {
      EXPECT_EQ(q1[i], 0.0);
      EXPECT_EQ(q2i[i], 0.0);
      EXPECT_NE(q3r[i], 0.0);
    }
  }
  const Csv plus = parse_csv(run(cmd_matrix_elements, resolve_config({{"sigma_z", "1"}})));
  const auto gate = plus.numbers("gate_abs");
  const auto pdm = plus.numbers("delta_m");
  for (std::size_t i = 0; i < pdm.size(); ++i) {
    if (pdm[i] > 0) {
      EXPECT_EQ(gate[i], 0.0);
    }
  }
}

TEST(Channels, ListsThreeRowsWithDominantMarker) {
  const Csv csv = parse_csv(run(cmd_channels, resolve_config({})));
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(csv.rows[0][0] + "," + csv.rows[0][1] + "," + csv.rows[0][2], "0,1,-1");
  EXPECT_EQ(csv.rows[1][0] + "," + csv.rows[1][1] + "," + csv.rows[1][2], "1,2,-1");
  EXPECT_EQ(csv.rows[2][0] + "," + csv.rows[2][1] + "," + csv.rows[2][2], "2,3,-1");
  EXPECT_EQ(csv.rows[1][csv.column("dominant")], "true");
  EXPECT_EQ(csv.rows[0][csv.column("dominant")], "false");
}

TEST(ResolveMoments, ComputeModeUsesQuadrature) {
  const ResolvedMoments q = resolve_moments(resolve_config({}));
  EXPECT_TRUE(q.computed);
  EXPECT_NEAR(q.q_xx, q.q_xz, 1e-12);
  const ResolvedMoments q0 = resolve_moments(resolve_config({{"delta_m", "0"}, {"ell", "1"}}));
  EXPECT_LT(q0.q_xx, q0.q_xz);
  const ResolvedMoments fixed = resolve_moments(config());
  EXPECT_FALSE(fixed.computed);
  EXPECT_EQ(fixed.q_xx, 10.0);
}

TEST(Validate, DefaultAndHamiltonianPass) {
  for (const char* conv : {"paper-eq12", "hamiltonian-eq5p"}) {
    std::ostringstream out;
    EXPECT_EQ(cmd_validate(resolve_config({{"convention", conv}}), out), 0) << conv;
    for (const std::string& line : split(out.str(), '\n')) {
      EXPECT_TRUE(nlohmann::json::parse(line)["pass"].get<bool>()) << line;
    }
  }
}

TEST(Tool, SelectionRuleRejectionNamesRule) {
  const ToolResult r = tool("rabi --delta-m 2 --ell 1 --sigma-z 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("polarization-gating"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  const ToolResult lin = tool("channels --sigma-z 0");
  EXPECT_EQ(lin.code, 2);
  EXPECT_NE(lin.err.find("circular-polarization"), std::string::npos);
}

TEST(Tool, CorruptMomentRejectedBeforeComputation) {
  const ToolResult r = tool("validate --q-xx-ea02 -1");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("q_xx_ea02"), std::string::npos);
}

TEST(Tool, UnknownFlagIsConfigError) {
  EXPECT_EQ(tool("rabi --no-such-flag 3").code, 2);
  EXPECT_EQ(tool("rabi --format xml").code, 2);
  EXPECT_EQ(tool("").code, 2);
}

TEST(Tool, PrecedenceFlagsOverFileOverDefaults) {
  const std::string path = ::testing::TempDir() + "vortexq_precedence.cfg";
  std::ofstream(path) << "waist_over_lambda=8\nsamples=20\nq_xx_ea02=10\nq_xz_ea02=10\n";
  const Csv from_file = parse_csv(tool("rabi --config " + path).out);
  EXPECT_EQ(from_file.meta.at("waist_over_lambda"), "8");
  EXPECT_EQ(from_file.meta.at("samples"), "20");
  EXPECT_EQ(from_file.meta.at("wavelength_nm"), "685");
  const Csv flagged = parse_csv(tool("rabi --config " + path + " --waist-over-lambda 6").out);
  EXPECT_EQ(flagged.meta.at("waist_over_lambda"), "6");
  EXPECT_EQ(flagged.meta.at("samples"), "20");
  const Csv before = parse_csv(tool("--waist-over-lambda 7 rabi --samples 5 --p 0").out);
  EXPECT_EQ(before.meta.at("waist_over_lambda"), "7");
  EXPECT_EQ(before.rows.size(), 5u);
}

TEST(Tool, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "vortexq_out.csv";
  const ToolResult direct = tool("channels");
  ASSERT_EQ(tool("channels --out " + path).code, 0);
  EXPECT_EQ(slurp(path), direct.out);
}
