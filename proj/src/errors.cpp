#include "ect/errors.hpp"

#include <sstream>

namespace ect {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Tie: return "TieError";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::Wall: return "WallError";
    case ErrorKind::Stratum: return "StratumError";
    case ErrorKind::UnmatchedJump: return "UnmatchedJump";
    case ErrorKind::Mode: return "ModeError";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::NonGenericSlice: return "NonGenericSlice";
    case ErrorKind::Window: return "WindowError";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NetTooSparse: return "NetTooSparse";
    case ErrorKind::CostExceeded: return "CostExceeded";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::CostCapExceeded: return "CostCapExceeded";
    case ErrorKind::UnknownDirection: return "UnknownDirection";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Unknown";
}

namespace {

std::string tie_message(int first, int second, double height) {
  std::ostringstream os;
  os.precision(17);
  os << "vertices " << first << " and " << second << " share height " << height;
  return os.str();
}

std::string parse_message(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

TieError::TieError(int first, int second, double height)
    : Error(ErrorKind::Tie, tie_message(first, second, height)),
      first_(first),
      second_(second) {}

ParseError::ParseError(int line, const std::string& what)
    : Error(ErrorKind::Parse, parse_message(line, what)), line_(line) {}

}  // namespace ect
