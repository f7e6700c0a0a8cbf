#pragma once

#include <stdexcept>

namespace qsubnet {

// Invalid or inconsistent user-supplied configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A random-instance generator could not produce a valid instance
// (CLI exit code 3).
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace qsubnet
