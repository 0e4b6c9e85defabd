#pragma once

#include <stdexcept>

namespace critlink {

// Bad input data or configuration. The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem trouble. The CLI maps this to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace critlink
