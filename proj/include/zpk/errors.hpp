#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zpk {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition (bad modulus, reducible
/// polynomial, repeated primes, ...).
struct InvalidParameter : Error {
    using Error::Error;
};

/// A requested computation exceeds a configured cap (table size, brute-force
/// tuple count, isomorphism search order).
struct CapacityError : Error {
    using Error::Error;
};

/// The operation is undefined for this input (maximal ideal of a non-local
/// ring, annihilator primality of a unit, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Ring-expression text could not be parsed; `offset` is the byte position
/// of the problem in the input string.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t offset_)
        : Error(what + " (at offset " + std::to_string(offset_) + ")"), offset(offset_) {}
};

} // namespace zpk
