#include "sgp/error.hpp"

namespace sgp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotNumerical: return "NotNumerical";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::NotMonomialAfterSpecialization: return "NotMonomialAfterSpecialization";
    case ErrorKind::FamilyContractViolation: return "FamilyContractViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace sgp
