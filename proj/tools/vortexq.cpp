#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "vortexq/cli/commands.hpp"
#include "vortexq/cli/run_config.hpp"
#include "vortexq/errors.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace vortexq;
  using namespace vortexq::cli;

  CLI::App app{"Quadrupole Rabi frequencies and absorption rates in optical vortex beams"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path = "-";
  std::string format = "csv";
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--out", out_path, "output file ('-' for stdout)");
  app.add_option("--format", format, "csv or json");

  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flags;
  for (const std::string& key : config_keys()) {
    flags[key] = app.add_option("--" + flag_name(key), flag_values[key]);
  }

  struct Subcommand {
    const char* name;
    const char* help;
  };
  const Subcommand subs[] = {
      {"matrix-elements", "quadrupole tensor for every delta_m"},
      {"rabi", "Rabi frequency profile for one channel"},
      {"rate", "absorption rate profile for one channel"},
      {"channels", "channels allowed for the chosen polarization"},
      {"validate", "run the numerical oracle suite"},
  };
  std::map<std::string, CLI::App*> commands;
  for (const auto& s : subs) {
    commands[s.name] = app.add_subcommand(s.name, s.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  try {
    std::map<std::string, std::string> values;
    if (!config_path.empty()) {
      values = read_config_file(config_path);
    }
    for (const auto& [key, opt] : flags) {
      if (opt->count() > 0) {
        values[key] = flag_values[key];
      }
    }
    const RunConfig config = resolve_config(values);
    const OutputFormat fmt = parse_format(format);

    std::ofstream file;
    if (out_path != "-") {
      file.open(out_path, std::ios::binary);
      if (!file) {
        throw ConfigError("cannot open output file '" + out_path + "'");
      }
    }
    std::ostream& out = out_path == "-" ? std::cout : file;

    int code = 0;
    if (commands["matrix-elements"]->parsed()) {
      code = cmd_matrix_elements(config, fmt, out);
    } else if (commands["rabi"]->parsed()) {
      code = cmd_rabi(config, fmt, out);
    } else if (commands["rate"]->parsed()) {
      code = cmd_rate(config, fmt, out);
    } else if (commands["channels"]->parsed()) {
      code = cmd_channels(config, fmt, out);
    } else {
      code = cmd_validate(config, out);
    }
    out.flush();
    return code;
  } catch (const SelectionRuleError& e) {
    std::cerr << "selection rule violated: " << e.what() << '\n';
    return exit_config;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return exit_config;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const DomainError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  }
}
