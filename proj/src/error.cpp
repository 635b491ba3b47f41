#include "garside/error.hpp"

namespace garside {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDef: return "MalformedDef";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::NotCancellative: return "NotCancellative";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NoRepresentation: return "NoRepresentation";
    case ErrorKind::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ZeroCanonicalLength: return "ZeroCanonicalLength";
    case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorKind::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace garside
