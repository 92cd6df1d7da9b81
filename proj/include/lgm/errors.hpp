#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgm {

// Base class for every error raised by the library. The C API maps each
// subclass onto its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input to an operation (mismatched variable counts, out-of-range
// parameters, non-unimodular matrices, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An expression cannot be expanded into a Laurent polynomial because one of
// its denominators is not a unit monomial.
class NotLaurentError : public Error {
 public:
  NotLaurentError(const std::string& what, std::string subexpression)
      : Error(what), subexpression_(std::move(subexpression)) {}

  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

// A bounded search or enumeration ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

// A corpus or model document does not conform to its JSON schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgm
