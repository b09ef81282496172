#include "ratcat/errors.hpp"

#include <sstream>

namespace ratcat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSlope: return "InvalidSlope";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::WrongTotal: return "WrongTotal";
    case ErrorCode::BelowDiagonal: return "BelowDiagonal";
    case ErrorCode::InvalidVector: return "InvalidVector";
    case ErrorCode::NotNoncrossing: return "NotNoncrossing";
    case ErrorCode::NegativeRank: return "NegativeRank";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::NotGood: return "NotGood";
    case ErrorCode::NotVeryGood: return "NotVeryGood";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DivisionRemainder: return "DivisionRemainder";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NonIntegerValue: return "NonIntegerValue";
    case ErrorCode::NotParkingWord: return "NotParkingWord";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

PathError::PathError(ErrorCode code, int x, const std::string& what)
    : Error(code, what), x_(x) {}

namespace {
std::string describe_negative(const std::vector<int>& block, long rank) {
  std::ostringstream os;
  os << "block {";
  for (std::size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i];
  os << "} has rank " << rank;
  return os.str();
}
}  // namespace

NegativeRankError::NegativeRankError(std::vector<int> block, long rank)
    : Error(ErrorCode::NegativeRank, describe_negative(block, rank)),
      block_(std::move(block)),
      rank_(rank) {}

}  // namespace ratcat
