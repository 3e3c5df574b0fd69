#include "addlin/error.hpp"

namespace addlin {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::NotPrimePower: return "NotPrimePower";
    case Status::ReduciblePolynomial: return "ReduciblePolynomial";
    case Status::ZeroConstantTerm: return "ZeroConstantTerm";
    case Status::FieldMismatch: return "FieldMismatch";
    case Status::DimensionMismatch: return "DimensionMismatch";
    case Status::Singular: return "Singular";
    case Status::RankDeficientBlock: return "RankDeficientBlock";
    case Status::BudgetExceeded: return "BudgetExceeded";
    case Status::ZeroGenerator: return "ZeroGenerator";
    case Status::PositionOutOfRange: return "PositionOutOfRange";
    case Status::InstanceTooLarge: return "InstanceTooLarge";
    case Status::ModulusMismatch: return "ModulusMismatch";
    case Status::AllCoordinatesZero: return "AllCoordinatesZero";
    case Status::ParseError: return "ParseError";
    case Status::IoError: return "IoError";
    case Status::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace addlin
