#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace arclike {

enum class ErrorKind {
  domain,
  composition,
  hypothesis,
  precondition,
  parse,
  inconsistent_center,
  boundary,
  construction,
  refine,
  internal_consistency,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& m) : Error(ErrorKind::domain, m) {}
};

class CompositionError : public Error {
 public:
  explicit CompositionError(const std::string& m)
      : Error(ErrorKind::composition, m) {}
};

// A map violates a standing hypothesis (f(0) = 0, both halves non-constant).
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& m)
      : Error(ErrorKind::hypothesis, m) {}
};

// An operation-specific precondition failed. `index` is the 1-based position
// in a map sequence when the failure is tied to one.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& m,
                             std::optional<std::size_t> index = std::nullopt)
      : Error(ErrorKind::precondition, m), index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error(ErrorKind::parse, m) {}
};

class InconsistentCenterError : public Error {
 public:
  explicit InconsistentCenterError(const std::string& m)
      : Error(ErrorKind::inconsistent_center, m) {}
};

class BoundaryError : public Error {
 public:
  explicit BoundaryError(const std::string& m)
      : Error(ErrorKind::boundary, m) {}
};

class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& m,
                    std::optional<std::size_t> stage = std::nullopt)
      : Error(ErrorKind::construction, m), stage_(stage) {}

  std::optional<std::size_t> stage() const noexcept { return stage_; }

 private:
  std::optional<std::size_t> stage_;
};

class RefineError : public Error {
 public:
  explicit RefineError(const std::string& m) : Error(ErrorKind::refine, m) {}
};

// Raised when a result contradicts something the mathematics guarantees.
// Always indicates a bug in this library.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& m)
      : Error(ErrorKind::internal_consistency, m) {}
};

}  // namespace arclike
