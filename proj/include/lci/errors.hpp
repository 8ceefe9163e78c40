#pragma once

#include <stdexcept>
#include <string>

namespace lci {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition on values (bad subset, unknown label, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input (JSON/DOT/ideal text).
class FormatError : public Error {
public:
    using Error::Error;
};

/// An internal consistency guarantee failed (round trip mismatch, oracle disagreement).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A strictly-positive quantity turned out to be zero or negative.
class PositivityError : public Error {
public:
    using Error::Error;
};

/// Numerical rank/conditioning failure.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A configured safety cap was exceeded (lattice closure, transversal count).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A call-site precondition failed (e.g. running intersection property).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace lci
