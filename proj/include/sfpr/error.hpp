#pragma once

#include <stdexcept>
#include <string>

namespace sfpr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The modulus is not an odd prime below 2^63.
class UnsupportedModulus : public DomainError {
public:
    using DomainError::DomainError;
};

/// A least-element search ran past its configured ceiling.
class SearchCeilingExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace sfpr
