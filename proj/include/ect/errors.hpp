#pragma once

#include <stdexcept>
#include <string>

namespace ect {

enum class ErrorKind {
  InvalidArgument,
  Tie,
  DuplicateVertex,
  Wall,
  Stratum,
  UnmatchedJump,
  Mode,
  BadRadius,
  NonGenericSlice,
  Window,
  SingularSystem,
  NetTooSparse,
  CostExceeded,
  ReconstructionFailed,
  SizeMismatch,
  CostCapExceeded,
  UnknownDirection,
  Parse,
  Validation,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a direction lies on the hyperplane division of the vertex set,
// i.e. two vertices share a height.
class TieError : public Error {
 public:
  TieError(int first, int second, double height);

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ect
