#pragma once

#include <stdexcept>
#include <string>

namespace braidwp {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different generator / strand counts, or a letter whose
// index falls outside the ambient range.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed text input (words, paths, serialized g-bases).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation precondition (e.g. a word that is not of
// conjugate shape handed to the path writer).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A path list breaks the link encoding rules.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidwp
