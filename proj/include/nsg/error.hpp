#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

enum class ErrorKind {
  NotNumerical,
  RegularSemigroup,
  NotAMember,
  FrobeniusCapExceeded,
  AmbientMismatch,
  ReductionCapExceeded,
  CapExceeded,
  TheoremViolation,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nsg
