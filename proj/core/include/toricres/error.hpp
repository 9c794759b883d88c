#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricres {

enum class ErrorCode {
  ZeroVector,
  NotSimplicial,
  NoRelation,
  AmbiguousRelation,
  NormalizationFailure,
  EmptyFacet,
  UnknownVertex,
  UncoveredVertex,
  InvalidInput,
  CenterNotPresent,
  UnknownComponent,
  ConsistencyViolation,
  NoProgress,
  NotTerminal,
  ValidationFailure,
  UnknownSimplex,
  IllegalAmbient,
  Unsupported,
  EngineFailure,
};

std::string_view to_string(ErrorCode code);

/// True for codes that describe bad user input rather than an engine defect.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace toricres
