// Error types shared across the library.
//
// Two failure modes are distinguished because callers treat them differently:
//   - domain_error:  the request itself is malformed (bad parameter, singular
//                    density, non-squarefree argument, ...).  The CLI maps
//                    these to exit code 2.
//   - budget_error:  the request is well-formed but its exact evaluation
//                    would exceed an enumeration budget (support cap, scan
//                    cap).  The CLI maps these to exit code 3 so scripts can
//                    retry with a larger budget or a smaller instance.
#pragma once

#include <stdexcept>
#include <string>

namespace lambda2 {

class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lambda2
