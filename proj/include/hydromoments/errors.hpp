#pragma once

#include <stdexcept>
#include <string>

namespace hydro {

// A precondition on the inputs was violated (maps to CLI exit code 2).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation failed to reach its accuracy target (maps to CLI exit code 3).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hydro
