#pragma once

#include <stdexcept>
#include <string>

namespace knroot {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input exceeded the desk-scale resource guards (dimension, ray count,
/// enumeration size).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Operation requires a pointed cone.
class NotPointedError : public Error {
public:
    using Error::Error;
};

/// Operation requires a sharp monoid.
class NotSharpError : public Error {
public:
    using Error::Error;
};

/// A lattice quotient that must be free has torsion (non-saturated input).
class TorsionError : public Error {
public:
    using Error::Error;
};

/// An element failed a monoid / lattice membership precondition.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// Two values that must live over the same monoid (or the same root level)
/// do not.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace knroot
