#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vortexq {

/// Argument outside the domain of a formula (e.g. evaluation on the beam axis
/// where the gradient terms are singular).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature or root finding failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested (delta_m, ell, sigma_z) combination breaks a selection rule.
class SelectionRuleError : public ConfigError {
 public:
  SelectionRuleError(std::string rule, const std::string& detail)
      : ConfigError(rule + ": " + detail), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

}  // namespace vortexq
