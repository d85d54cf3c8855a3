#pragma once

#include <stdexcept>
#include <string>

namespace struveint {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma-type function evaluated at a non-positive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Result exceeds the representable double range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Series or quadrature hit its iteration cap before meeting tolerance.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Wright series parameters violate the convergence condition.
class ConvergenceViolationError : public Error {
public:
    using Error::Error;
};

/// An integrand returned a non-finite value at a quadrature node.
class NanError : public Error {
public:
    using Error::Error;
};

/// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Configuration text could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parsed configuration or case violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File system failure while reading or writing.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace struveint
