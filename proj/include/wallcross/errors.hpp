#ifndef WALLCROSS_ERRORS_HPP
#define WALLCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wallcross {

// Machine-readable failure codes; every library error carries one so the
// CLI can surface structured {error, detail} documents.
enum class ErrorCode {
  NotSkewSymmetric,
  ConeMismatch,
  NonzeroConstantTerm,
  DegenerateForm,
  InconsistentAction,
  BadLattice,
  ZeroVector,
  NotPrimitive,
  SupportOutsideCone,
  DegenerateCharge,
  SectorTooWide,
  SectorNotStrict,
  OrderingViolated,
  NonUnitConstantTerm,
  PoleAtMinusOne,
  NotDivisible,
  NotHomogeneous,
  ZeroCharge,
  IndexError,
  NonGenericPath,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace wallcross

#endif  // WALLCROSS_ERRORS_HPP
