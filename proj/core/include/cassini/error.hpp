#pragma once

#include <stdexcept>
#include <string>

namespace cassini {

/// Raised for malformed or out-of-contract inputs (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request cannot be satisfied: size caps, disconnected graphs (CLI exit code 3).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cassini
