#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qseries {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands from different scalar signatures, malformed q-matrices, etc.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// Raised when inverting a series whose constant term vanishes.
class NotAUnit : public Error {
public:
  using Error::Error;
};

class NoLeadingTerm : public Error {
public:
  using Error::Error;
};

class InvalidTorusElement : public Error {
public:
  using Error::Error;
};

class DegenerateShear : public Error {
public:
  using Error::Error;
};

class SeparationFailure : public Error {
public:
  using Error::Error;
};

class NotApplicable : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position)
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace qseries
