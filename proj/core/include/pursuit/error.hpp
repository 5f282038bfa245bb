#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pursuit {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NotOuterplanar,
  TooFewVertices,
  InvalidPolygon,
  WrongTurn,
  TerminalState,
  IllegalMove,
  PolicyIllegalMove,
  StateBudgetExceeded,
  BadParameter,
  BadComponent,
  InvalidDecomposition,
  InvalidTree,
  InvalidCover,
  InsufficientZombies,
  SetTooLarge,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; every fallible operation in
/// the library reports failure through it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pursuit
