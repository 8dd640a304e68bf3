#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdc {

/// Failure category. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kUsage = 2,
  kDomain = 3,
  kSolver = 4,
  kIo = 5,
};

std::string_view error_code_tag(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input outside a model's domain, or a record violating its invariants.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

/// A root search that has no bracketed solution.
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what) : Error(ErrorCode::kSolver, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::kUsage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

}  // namespace pdc
