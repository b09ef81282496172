#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratcat {

enum class ErrorCode {
  InvalidSlope,
  InvalidArgument,
  InvalidPartition,
  InvalidSequence,
  ParseError,
  WrongLength,
  WrongTotal,
  BelowDiagonal,
  InvalidVector,
  NotNoncrossing,
  NegativeRank,
  NotFixed,
  NotGood,
  NotVeryGood,
  HypothesisViolated,
  DivisionRemainder,
  NegativeCoefficient,
  NonIntegerValue,
  NotParkingWord,
};

std::string_view to_string(ErrorCode code);

// Base of every exception thrown by the library. The code is stable and is
// what the CLI and the tests key on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by path validation. For BelowDiagonal, x() is the first column
// (1-based) whose prefix height is too low; otherwise it is 0.
class PathError : public Error {
 public:
  PathError(ErrorCode code, int x, const std::string& what);
  int x() const noexcept { return x_; }

 private:
  int x_;
};

class NegativeRankError : public Error {
 public:
  NegativeRankError(std::vector<int> block, long rank);
  const std::vector<int>& block() const noexcept { return block_; }
  long rank() const noexcept { return rank_; }

 private:
  std::vector<int> block_;
  long rank_;
};

}  // namespace ratcat
