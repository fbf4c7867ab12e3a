#pragma once

#include <stdexcept>
#include <string>

namespace bidisk {

struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed or precondition-violating input.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a search terminates without a decision.
struct UnknownResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bidisk
