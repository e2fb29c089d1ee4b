#pragma once

// Subcommand implementations. Each writes its full output to `out` and
// returns the process exit code; configuration and selection-rule problems
// surface as ConfigError / SelectionRuleError, numerical breakdown as
// NumericalError.

#include <ostream>

#include "vortexq/cli/run_config.hpp"

namespace vortexq::cli {

enum class OutputFormat { Csv, Json };

/// Parses "csv" / "json"; throws ConfigError otherwise.
OutputFormat parse_format(const std::string& text);

/// |Q_xx| and |Q_xz| in e*a0^2, either from the config or by quadrature.
struct ResolvedMoments {
  double q_xx;
  double q_xz;
  bool computed;
};

/// In compute mode q_xx comes from the channel's own upper sublevel
/// (m = 0 for delta_m = 0, m = 2 sign(delta_m) otherwise) and q_xz from
/// m = sign(delta_m), or m = +1 when delta_m = 0.
ResolvedMoments resolve_moments(const RunConfig& config);

int cmd_matrix_elements(const RunConfig& config, OutputFormat format, std::ostream& out);
int cmd_rabi(const RunConfig& config, OutputFormat format, std::ostream& out);
int cmd_rate(const RunConfig& config, OutputFormat format, std::ostream& out);
int cmd_channels(const RunConfig& config, OutputFormat format, std::ostream& out);
/// One JSON object per line; returns 3 if any check fails.
int cmd_validate(const RunConfig& config, std::ostream& out);

}  // namespace vortexq::cli
