#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (zero denominator, q out of range, even modulus, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input, e.g. a rational that is not "num/den".
class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A computation would exceed a configured size limit.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace qeuler
