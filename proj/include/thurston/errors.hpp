#pragma once

#include <stdexcept>
#include <string>

namespace thurston {

enum class ErrorKind {
  Domain,
  Degenerate,
  Precondition,
  Consistency,
  Unreachable,
  Singularity,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Base of every exception thrown by the library. The C API maps kind() onto
// its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A point is outside the model of the selected geometry.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

class PrecondError : public Error {
 public:
  explicit PrecondError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

// A computed value contradicts a proven property. Always an implementation bug.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(ErrorKind::Consistency, what) {}
};

class UnreachableError : public Error {
 public:
  explicit UnreachableError(const std::string& what) : Error(ErrorKind::Unreachable, what) {}
};

class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what) : Error(ErrorKind::Singularity, what) {}
};

}  // namespace thurston
