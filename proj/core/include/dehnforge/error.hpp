#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dehnforge {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  NegativeRadicand,
  UnsupportedRadicand,
  NotEmbeddable,
  ZeroElement,
  UnsupportedField,
  ParseError,
  UnknownGenerator,
  DimensionOverflow,
  NotAComplex,
  ZeroInMultiplicativeSlot,
  NotACoalgebra,
  DegenerateRestriction,
  IrrationalDiscriminant,
  CoincidentLines,
  NotGenericPosition,
  NotEuclideanSimplex,
  AdjunctionRequired,
  NotRealEmbeddable,
  MixedWeights,
  ArgumentOutOfDomain,
  KernelTruncationEmpty,
  NotRationalFunctionField,
  TruncationBlowup,
  ShapeMismatch,
  InsufficientPrecision,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. `witness` carries
// a human-readable pointer to the offending generator, face or position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace dehnforge
