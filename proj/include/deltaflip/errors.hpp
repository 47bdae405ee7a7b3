#pragma once

#include <stdexcept>
#include <string>

namespace deltaflip {

/// Base class for all library errors. `name()` is the stable identifier the
/// CLI prints; `is_input_error()` separates malformed input (exit 2) from
/// mathematical failures on well-formed input (exit 1).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message, bool input_error)
      : std::runtime_error(message), name_(std::move(name)), input_error_(input_error) {}

  const std::string& name() const noexcept { return name_; }
  bool is_input_error() const noexcept { return input_error_; }

 private:
  std::string name_;
  bool input_error_;
};

/// An element or subset outside the ground set, or an otherwise ill-formed value.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& m) : Error("domain-error", m, true) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error("parse-error", m, true) {}
};

/// Exponential computation refused above its size cap (override with force).
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& m) : Error("size-guard", m, true) {}
};

/// Orbit enumeration exceeded its cap.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& m) : Error("resource-error", m, true) {}
};

class ImproperSystemError : public Error {
 public:
  explicit ImproperSystemError(const std::string& m) : Error("improper-system", m, false) {}
};

class PivotUndefinedError : public Error {
 public:
  explicit PivotUndefinedError(const std::string& m) : Error("pivot-undefined", m, false) {}
};

class NotAGraphError : public Error {
 public:
  explicit NotAGraphError(const std::string& m) : Error("not-a-graph", m, false) {}
};

class NotAMatroidError : public Error {
 public:
  explicit NotAMatroidError(const std::string& m) : Error("not-a-matroid", m, true) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& m) : Error("precondition", m, false) {}
};

/// A recursive computation disagreed with the definitional one.
class RecursionMismatchError : public Error {
 public:
  explicit RecursionMismatchError(const std::string& m) : Error("recursion-mismatch", m, false) {}
};

}  // namespace deltaflip
