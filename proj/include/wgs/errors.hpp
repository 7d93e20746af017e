#pragma once
#include <stdexcept>

namespace wgs {

// Raised when an algorithm fails numerically (non-convergence, blow-up,
// missing bracket); distinct from std::invalid_argument contract violations.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wgs
