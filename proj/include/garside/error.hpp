#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace garside {

enum class ErrorKind {
  MalformedDef,
  NotBalanced,
  NotLattice,
  NotCancellative,
  ClosureCapExceeded,
  NoRepresentation,
  NonInvertibleGenerator,
  NotHomogeneous,
  CapExceeded,
  ZeroCanonicalLength,
  WitnessVerificationFailed,
  StateBudgetExceeded,
  BudgetExceeded,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// All domain failures surface as this exception; `kind()` lets callers map
// them to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace garside
