#include "mcatt/error.hpp"

namespace mcatt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DuplicateVar: return "DuplicateVar";
    case ErrorCode::ScopeError: return "ScopeError";
    case ErrorCode::TheoryViolation: return "TheoryViolation";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NotPs: return "NotPs";
    case ErrorCode::BoundaryUndefined: return "BoundaryUndefined";
    case ErrorCode::SideConditionViolation: return "SideConditionViolation";
    case ErrorCode::SubstMismatch: return "SubstMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NameMismatch: return "NameMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ElaborationAmbiguous: return "ElaborationAmbiguous";
    case ErrorCode::ElaborationMismatch: return "ElaborationMismatch";
  }
  return "?";
}

std::string Span::to_string() const {
  std::string out = item;
  if (line > 0) {
    if (!out.empty()) out += " at ";
    out += "line " + std::to_string(line) + ":" + std::to_string(col);
  }
  return out;
}

}  // namespace mcatt
