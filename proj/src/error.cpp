#include "springer/error.hpp"

namespace springer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CrossingArcs: return "CrossingArcs";
    case ErrorCode::RayUnderArc: return "RayUnderArc";
    case ErrorCode::VertexReuse: return "VertexReuse";
    case ErrorCode::DotOnNonArc: return "DotOnNonArc";
    case ErrorCode::BadCounts: return "BadCounts";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotInRestrictableSet: return "NotInRestrictableSet";
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoStandardCompletion: return "NoStandardCompletion";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::PadSizeMismatch: return "PadSizeMismatch";
    case ErrorCode::NotAnArrowPair: return "NotAnArrowPair";
    case ErrorCode::InhomogeneousClass: return "InhomogeneousClass";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::PullbackFailed: return "PullbackFailed";
    case ErrorCode::UncalibratedConvention: return "UncalibratedConvention";
    case ErrorCode::NoConventionFits: return "NoConventionFits";
  }
  return "Unknown";
}

}  // namespace springer
