#pragma once

#include <stdexcept>
#include <string>

namespace v2vbeam {

/// Invalid or inconsistent configuration (bad JSON, out-of-range settings,
/// conflicting maneuvers). CLI maps this to its own exit code.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Problems with data files or generated data (missing manifest, corrupt
/// frame records, degenerate normalization ranges, unusable sequences).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite loss or gradient during training. Carries the name of the
/// offending parameter block.
class TrainingDivergence : public std::runtime_error {
 public:
  TrainingDivergence(const std::string& parameter, const std::string& what)
      : std::runtime_error("training diverged at " + parameter + ": " + what),
        parameter_(parameter) {}

  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace v2vbeam
