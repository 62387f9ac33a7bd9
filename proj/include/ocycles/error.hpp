#pragma once

#include <stdexcept>
#include <string>

namespace ocycles {

/// Raised when an argument violates an operation's precondition
/// (out-of-range overlap, mismatched lengths, non-divisor block size, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a value is well-formed but outside the domain of the
/// operation, e.g. asking for the ball count of an invalid juggling sequence.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ocycles
