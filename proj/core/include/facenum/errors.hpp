#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facenum {

enum class ErrorCode {
  EmptyInput,
  DuplicateVertexInFacet,
  InvalidLabel,
  ParseError,
  FaceNotInComplex,
  VertexNotInComplex,
  BadSkeletonDim,
  InvalidField,
  ShapeMismatch,
  FieldMismatch,
  BadDimension,
  NotASubcomplex,
  BadIndex,
  NotAManifold,
  Disconnected,
  LengthMismatch,
  NegativeInput,
  WrongParity,
  BettiPreconditionViolated,
  DimensionTooSmall,
  UnsupportedCharacteristic,
  EmptyBoundary,
  GenericityFailure,
  FieldTooSmall,
  DegreeOutOfRange,
  PreconditionViolated,
  LabelCollision,
  BadParams,
  ValidationFailure,
  NotBoundaryFace,
  IdentificationCreatesNonManifold,
  FaceNotFacet,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace facenum
