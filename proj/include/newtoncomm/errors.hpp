#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newtoncomm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

/// Operands live in different rings (e.g. Laurent polynomials with different root index).
class RingMismatch : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis of the called operation is not met (e.g. deg f < 2).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// The derivation is not of the form q * delta_f with q in K[H].
class NotAMultiple : public Error {
public:
    using Error::Error;
};

class DegenerateRecurrence : public Error {
public:
    using Error::Error;
};

class SingularDelta : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace newtoncomm
