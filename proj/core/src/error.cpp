#include "pursuit/error.hpp"

namespace pursuit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::SelfLoop: return "SELF_LOOP";
    case ErrorCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::NotOuterplanar: return "NOT_OUTERPLANAR";
    case ErrorCode::TooFewVertices: return "TOO_FEW_VERTICES";
    case ErrorCode::InvalidPolygon: return "INVALID_POLYGON";
    case ErrorCode::WrongTurn: return "WRONG_TURN";
    case ErrorCode::TerminalState: return "TERMINAL_STATE";
    case ErrorCode::IllegalMove: return "ILLEGAL_MOVE";
    case ErrorCode::PolicyIllegalMove: return "POLICY_ILLEGAL_MOVE";
    case ErrorCode::StateBudgetExceeded: return "STATE_BUDGET_EXCEEDED";
    case ErrorCode::BadParameter: return "BAD_PARAMETER";
    case ErrorCode::BadComponent: return "BAD_COMPONENT";
    case ErrorCode::InvalidDecomposition: return "INVALID_DECOMPOSITION";
    case ErrorCode::InvalidTree: return "INVALID_TREE";
    case ErrorCode::InvalidCover: return "INVALID_COVER";
    case ErrorCode::InsufficientZombies: return "INSUFFICIENT_ZOMBIES";
    case ErrorCode::SetTooLarge: return "SET_TOO_LARGE";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace pursuit
