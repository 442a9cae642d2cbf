#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsecs {

enum class ErrorKind {
  invalid_spec,
  invalid_argument,
  dimension_mismatch,
  scale_mismatch,
  singular_system,
  underdetermined,
  empty_support,
  divergence,
  config,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Base for every failure raised by the library. `kind()` lets callers
/// (the bench harness, the CLI) classify failures without RTTI chains.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by OMP / least squares when the restricted column set loses rank.
/// Carries the support that had been accumulated when the failure occurred.
class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, std::vector<int> support)
      : Error(ErrorKind::singular_system, what), support_(std::move(support)) {}

  const std::vector<int>& support() const noexcept { return support_; }

 private:
  std::vector<int> support_;
};

/// Config parse failure; line is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(ErrorKind::config, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sparsecs
