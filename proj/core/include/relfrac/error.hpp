#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "relfrac/rational.hpp"

namespace relfrac {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidArgument,
  kSizeLimit,
  kTimeout,
  kParseError,
  kScriptError,
  kNotVertexTransitive,
  kInternalInconsistency,
  kNonconvergence,
  kUndecided,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by exact solvers when the wall-clock budget runs out. The best
// feasible objective seen so far travels with the error.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& message, Rational best_lower_bound)
      : Error(ErrorKind::kTimeout, message),
        best_lower_bound_(std::move(best_lower_bound)) {}
  const Rational& best_lower_bound() const { return best_lower_bound_; }

 private:
  Rational best_lower_bound_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ScriptError : public Error {
 public:
  ScriptError(int step, const std::string& message)
      : Error(ErrorKind::kScriptError,
              "step " + std::to_string(step) + ": " + message),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

}  // namespace relfrac
