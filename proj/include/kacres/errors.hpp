#pragma once

#include <stdexcept>

namespace kacres {

// Refusal to start a computation whose certified window or dimension bound
// is exceeded; mapped to its own CLI exit code.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kacres
