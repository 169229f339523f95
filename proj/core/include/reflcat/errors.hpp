#pragma once

#include <stdexcept>
#include <string>

namespace reflcat {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's stated domain (i <= 0, bad label, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Field inversion of zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Galois exponent not coprime to the conductor.
class InvalidAutomorphismError : public Error {
public:
    using Error::Error;
};

/// Unparseable or unsupported group specification.
class GroupSpecError : public Error {
public:
    using Error::Error;
};

/// Group order exceeds the configured cap and allow_large was not set.
class OrderCapError : public Error {
public:
    using Error::Error;
};

/// A structural identity that must hold by construction failed; indicates
/// corrupt generator data or an arithmetic bug, never user error.
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

/// Generator/psi data file missing, malformed, or failing its checksum.
class DataFileError : public Error {
public:
    using Error::Error;
};

/// Requested computation is outside the supported catalog (e.g. positive
/// Fuss-Catalan polynomials for groups without stored twist data).
class UnsupportedCaseError : public Error {
public:
    using Error::Error;
};

/// Internal arithmetic produced an impossible value (non-integral Molien
/// coefficient etc.); always a bug, reported loudly.
class ComputationError : public Error {
public:
    using Error::Error;
};

} // namespace reflcat
