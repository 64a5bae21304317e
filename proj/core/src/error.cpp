#include "dehnforge/error.hpp"

namespace dehnforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::UnsupportedRadicand: return "UnsupportedRadicand";
    case ErrorCode::NotEmbeddable: return "NotEmbeddable";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ZeroInMultiplicativeSlot: return "ZeroInMultiplicativeSlot";
    case ErrorCode::NotACoalgebra: return "NotACoalgebra";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::IrrationalDiscriminant: return "IrrationalDiscriminant";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotGenericPosition: return "NotGenericPosition";
    case ErrorCode::NotEuclideanSimplex: return "NotEuclideanSimplex";
    case ErrorCode::AdjunctionRequired: return "AdjunctionRequired";
    case ErrorCode::NotRealEmbeddable: return "NotRealEmbeddable";
    case ErrorCode::MixedWeights: return "MixedWeights";
    case ErrorCode::ArgumentOutOfDomain: return "ArgumentOutOfDomain";
    case ErrorCode::KernelTruncationEmpty: return "KernelTruncationEmpty";
    case ErrorCode::NotRationalFunctionField: return "NotRationalFunctionField";
    case ErrorCode::TruncationBlowup: return "TruncationBlowup";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace dehnforge
