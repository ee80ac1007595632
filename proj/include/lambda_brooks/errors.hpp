#pragma once

#include <stdexcept>
#include <string>

namespace lambda_brooks {

/// Caller violated an operation's precondition (bad vertex id, u == v, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact oracle refused an instance above its configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or certificate file. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A branch the coloring procedure proves unreachable was reached anyway.
/// `repro()` is a JSON document with the offending subproblem.
class InternalInconsistency : public std::logic_error {
 public:
  InternalInconsistency(const std::string& what, std::string repro)
      : std::logic_error(what), repro_(std::move(repro)) {}

  const std::string& repro() const noexcept { return repro_; }

 private:
  std::string repro_;
};

}  // namespace lambda_brooks
