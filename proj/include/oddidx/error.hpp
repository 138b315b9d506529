#pragma once

#include <stdexcept>
#include <string>

namespace oddidx {

// Base of every error the library reports. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Result not representable in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of the operation (even N, n = 0, j < 2 ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Query beyond what a sieve table covers.
class RangeError : public Error {
public:
    using Error::Error;
};

// Memory budget or I/O limits.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed sieve cache file.
class FormatError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree did not.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace oddidx
