#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdd {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  NotEvenGraph,
  NotACycle,
  NotCubic,
  WrongCardinality,
  SizeLimitExceeded,
  UnderlyingGraphMismatch,
  InvalidParameters,
  Infeasible,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdd
