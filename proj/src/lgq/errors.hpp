#pragma once

#include <stdexcept>
#include <string>

namespace lgq {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text handed to one of the parsers.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Division by an exactly-zero element.
class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

/// Evaluation point hits a vanishing denominator.
class PoleError : public Error {
public:
  using Error::Error;
};

/// An exact rational value was demanded but the s-component survives.
class IrrationalValueError : public Error {
public:
  using Error::Error;
};

/// Structural inconsistency: dimension mismatch, singular matrix,
/// degenerate pairing, and similar.
class StructureError : public Error {
public:
  using Error::Error;
};

/// A derivation step failed: a linear system that must have a unique
/// solution is under- or over-determined, or a certificate check failed.
class DerivationError : public Error {
public:
  using Error::Error;
};

}  // namespace lgq
