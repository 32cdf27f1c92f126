#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tridisc {

enum class ErrorCode {
  EmptyInput,
  DegenerateTriangle,
  NonManifoldEdge,
  InconsistentOrientation,
  NotConnected,
  NotADisc,
  UnknownVertex,
  MultipleIrregular,
  NotIrregular,
  Infeasible,
  PropagationConflict,
  DegenerateCut,
  BranchOnBoundary,
  NotRealizable,
  NoCorners,
  InfeasibleByGaussBonnet,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// All failures raised by the library carry one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tridisc
