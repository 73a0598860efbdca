#pragma once

#include <stdexcept>
#include <string>

namespace shiftdim {

/// Malformed or inconsistent input (maps to CLI exit code 1).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation that was declined, e.g. a search cap was exceeded (exit code 2).
class RefusedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (exit code 3).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace shiftdim
