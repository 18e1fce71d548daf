#pragma once

#include <stdexcept>

namespace tsemi {

// Bad arguments or malformed input.  CLI maps this to exit code 1.
struct invalid_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size/iteration ceiling was exceeded.  CLI exit code 2.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure (non-convergence, domain violations of the analytic
// functions).  CLI exit code 3.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tsemi
