#include "facenum/errors.hpp"

namespace facenum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorCode::BadSkeletonDim: return "BadSkeletonDim";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotAManifold: return "NotAManifold";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::WrongParity: return "WrongParity";
    case ErrorCode::BettiPreconditionViolated: return "BettiPreconditionViolated";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::NotBoundaryFace: return "NotBoundaryFace";
    case ErrorCode::IdentificationCreatesNonManifold: return "IdentificationCreatesNonManifold";
    case ErrorCode::FaceNotFacet: return "FaceNotFacet";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace facenum
