#pragma once

#include <stdexcept>
#include <string>

namespace mgeo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside the mathematical domain of an operation (p <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that is supposed to be an almost product or metallic structure is not.
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent factor realization (sphere with c <= 0, flat with c != 0, ...).
class RealizationError : public Error {
 public:
  using Error::Error;
};

/// Point or immersion does not lie on the realized ambient manifold.
class OffManifoldError : public Error {
 public:
  using Error::Error;
};

/// Caller supplied arguments that violate an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Linearly dependent input where an orthonormal frame was requested.
class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

/// Induced metric is singular or too badly conditioned to be trusted.
class DegenerateImmersionError : public Error {
 public:
  using Error::Error;
};

/// Slant data inconsistent with a declared submanifold type, or bad distributions.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax or symbol error, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Expression evaluation hit a singularity (division by ~0, sqrt of a negative).
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& message, std::string node)
      : Error(message + " in '" + node + "'"), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

}  // namespace mgeo
