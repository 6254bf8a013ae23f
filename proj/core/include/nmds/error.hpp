#pragma once

#include <stdexcept>
#include <string>

namespace nmds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad modulus, invalid v/w, parse failure, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An operation was asked to do something its preconditions rule out
/// (e.g. the NMDS pairing check on an MDS code).
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace nmds
