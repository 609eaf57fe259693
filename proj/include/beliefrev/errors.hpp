#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beliefrev {

// Base class for every error raised by the library. Callers that only need
// to report a diagnostic can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

// Invalid, oversized or mismatched signatures.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// Malformed state files and rank tables.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

// A contraction was requested on the absurd outcome of revising by falsum.
class UnsupportedSequenceError : public Error {
 public:
  using Error::Error;
};

class UnknownOperatorError : public Error {
 public:
  using Error::Error;
};

}  // namespace beliefrev
