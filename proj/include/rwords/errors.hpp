#pragma once

#include <stdexcept>
#include <string>

namespace rwords {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed substitution file or directive list.
struct ParseError : Error {
  using Error::Error;
};

// Bad constructor arguments (alphabet size, directive values, coefficient ranges).
struct ParameterError : Error {
  using Error::Error;
};

// Substitution object violates a structural requirement (empty image, seed condition).
struct ConstructionError : Error {
  using Error::Error;
};

// Query outside the certified range of a table.
struct RangeError : Error {
  using Error::Error;
};

// Word never occurs in the source.
struct NotAFactorError : Error {
  using Error::Error;
};

// Saturation or stabilization not reached within the prefix-length guard.
// CLI maps this family to exit code 3.
struct CertificationError : Error {
  using Error::Error;
};

// Return-trie expansion exceeded its depth cap.
struct CapError : Error {
  using Error::Error;
};

// A numeric classification was ambiguous at the required tolerance.
struct PrecisionError : Error {
  using Error::Error;
};

// An operation's stated precondition was not established by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace rwords
