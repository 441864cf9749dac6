#pragma once

#include <stdexcept>
#include <string>

namespace rbc {

// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal self-check failed. Seeing one of these is a defect.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rbc
