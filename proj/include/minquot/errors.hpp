#pragma once

#include <stdexcept>
#include <string>

namespace minquot {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two elements with incompatible degree/dimension were combined.
struct DimensionMismatch : Error {
  using Error::Error;
};

// An element (or pair component) was required to lie in a group table
// and does not.
struct NotInGroup : Error {
  using Error::Error;
};

// A closure run exceeded the configured element-count ceiling.
struct CeilingExceeded : Error {
  CeilingExceeded(std::size_t ceiling)
      : Error("closure exceeded element ceiling of " +
              std::to_string(ceiling)),
        ceiling(ceiling) {}
  std::size_t ceiling;
};

// A parameter (n, g, enumeration bound) is outside the supported range.
struct RangeError : Error {
  using Error::Error;
};

// A braid word or free-group word is malformed.
struct InvalidWord : Error {
  using Error::Error;
};

// An operation requiring a valid homomorphism was called on an invalid one.
struct InvalidHom : Error {
  using Error::Error;
};

// A relation that must hold for exactly one sign/orientation held for
// neither; indicates a convention bug rather than bad input.
struct ConventionError : Error {
  using Error::Error;
};

// Catalog or input text could not be parsed.
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  explicit ParseError(const std::string& what) : Error(what), line(0) {}
  std::size_t line;
};

}  // namespace minquot
