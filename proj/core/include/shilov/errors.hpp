#pragma once

#include <stdexcept>
#include <string>

namespace shilov {

// Bad input: malformed config, precondition violation. CLI exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The computation itself gave up: precision exhausted, tolerance unreachable.
// CLI exit code 1.
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shilov
