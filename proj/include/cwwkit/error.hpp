#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>
#include <utility>

namespace cwwkit {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on numeric arguments was violated (empty input, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A feedback word could not be matched against its parameter's term set.
class ResolutionError : public Error {
 public:
  ResolutionError(std::string parameter, std::string word)
      : Error("unknown word '" + word + "' for parameter '" + parameter + "'"),
        parameter_(std::move(parameter)),
        word_(std::move(word)) {}

  const std::string& parameter() const noexcept { return parameter_; }
  const std::string& word() const noexcept { return word_; }

 private:
  std::string parameter_;
  std::string word_;
};

/// Input does not match the parameter schema (missing or extra parameter).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Malformed delimited-text input. Row numbers are 1-based and count the header.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A value violates a structural invariant (FOU ordering, height, containment...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A codebook does not cover every word of the schema.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Membership mass is zero where a weighted average is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The evaluation was requested without something it needs (e.g. a codebook).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cwwkit
