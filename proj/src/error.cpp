#include "hgg/error.hpp"

namespace hgg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotATransversal: return "NotATransversal";
    case ErrorCode::MalformedTables: return "MalformedTables";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::MultipleSolutions: return "MultipleSolutions";
    case ErrorCode::NoAmbient: return "NoAmbient";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace hgg
