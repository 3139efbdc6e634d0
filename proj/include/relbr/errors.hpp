#pragma once

#include <stdexcept>
#include <string>

namespace relbr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SingularCurve : public Error {
public:
    using Error::Error;
};

class PointNotOnCurve : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A cofactor survived trial division and Pollard rho within the configured caps.
class FactoringLimitExceeded : public Error {
public:
    using Error::Error;
};

class DivisionByZeroFunction : public Error {
public:
    using Error::Error;
};

/// Raised when an assembled 2-cocycle entry is not a constant function.
/// This is an internal consistency failure, never a property of the input.
class NonConstantCocycleValue : public Error {
public:
    using Error::Error;
};

class RamifiedPrime : public Error {
public:
    using Error::Error;
};

}  // namespace relbr
