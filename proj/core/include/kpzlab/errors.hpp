#pragma once

#include <stdexcept>
#include <string>

namespace kpzlab {

/// Invalid user-supplied configuration (bad geometry parameters, malformed
/// config files, out-of-range arguments). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to meet its accuracy contract (quadrature did
/// not converge under doubling, eigensolver failure, SDE ordering violation).
/// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kpzlab
