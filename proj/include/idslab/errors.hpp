#pragma once

#include <stdexcept>
#include <string>

namespace idslab {

// Invalid specs, invalid config files, size limits. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown that survived every fallback. CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query outside an operation's domain (e.g. resolvent on the spectrum).
// CLI exit code 2.
class InvalidQuery : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace idslab
