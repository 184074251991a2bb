#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgp {

enum class ErrorKind {
  InvalidInput,
  NotNumerical,
  NotMember,
  InvalidRelation,
  NotMonomialAfterSpecialization,
  FamilyContractViolation,
  BudgetExceeded,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind tells callers (and the
/// CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace sgp
