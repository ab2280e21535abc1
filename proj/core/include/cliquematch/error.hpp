#pragma once

#include <stdexcept>
#include <string>

namespace cliquematch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Input parsed but violates a structural invariant (e.g. ragged frames).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument is outside its documented range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration (mismatched complexes, bad protocol setup).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerical routine failed to converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A hard resource cap (e.g. clique count) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliquematch
