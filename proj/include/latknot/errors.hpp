#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latknot {

enum class ErrorCode {
  MalformedInput,
  NotAPermutation,
  SameCellXO,
  MultiComponent,
  SizeTooSmall,
  FoldCollision,
  ReconnectFailure,
  DegenerateCurve,
  DegenerateKnot,
  NoRegularShear,
  CrossingTooSmall,
  BadDensity,
};

std::string_view to_string(ErrorCode code) noexcept;

class KnotError : public std::runtime_error {
public:
  KnotError(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace latknot
