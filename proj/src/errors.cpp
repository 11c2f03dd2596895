#include "wallcross/errors.hpp"

namespace wallcross {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::ConeMismatch: return "ConeMismatch";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::InconsistentAction: return "InconsistentAction";
    case ErrorCode::BadLattice: return "BadLattice";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::SupportOutsideCone: return "SupportOutsideCone";
    case ErrorCode::DegenerateCharge: return "DegenerateCharge";
    case ErrorCode::SectorTooWide: return "SectorTooWide";
    case ErrorCode::SectorNotStrict: return "SectorNotStrict";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroCharge: return "ZeroCharge";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::NonGenericPath: return "NonGenericPath";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace wallcross
