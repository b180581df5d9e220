#include "latknot/errors.hpp"

namespace latknot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::MalformedInput: return "MalformedInput";
  case ErrorCode::NotAPermutation: return "NotAPermutation";
  case ErrorCode::SameCellXO: return "SameCellXO";
  case ErrorCode::MultiComponent: return "MultiComponent";
  case ErrorCode::SizeTooSmall: return "SizeTooSmall";
  case ErrorCode::FoldCollision: return "FoldCollision";
  case ErrorCode::ReconnectFailure: return "ReconnectFailure";
  case ErrorCode::DegenerateCurve: return "DegenerateCurve";
  case ErrorCode::DegenerateKnot: return "DegenerateKnot";
  case ErrorCode::NoRegularShear: return "NoRegularShear";
  case ErrorCode::CrossingTooSmall: return "CrossingTooSmall";
  case ErrorCode::BadDensity: return "BadDensity";
  }
  return "Unknown";
}

} // namespace latknot
