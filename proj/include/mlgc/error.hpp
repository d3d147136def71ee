#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlgc {

enum class ErrorCode {
  InvalidArgument,
  IsolatedVertex,
  DisconnectedGraph,
  NotSymmetric,
  KOutOfRange,
  NoConvergence,
  DimensionMismatch,
  EmptyLayerList,
  NonpositiveSigma,
  AlphaLengthMismatch,
  TooFewPoints,
  LengthMismatch,
  DuplicatePoints,
  InvalidDataset,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlgc
