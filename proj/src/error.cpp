#include "alexandroff/error.hpp"

#include <utility>

namespace alex {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ReflexivityViolation: return "ReflexivityViolation";
    case ErrorCode::MinimalityViolation: return "MinimalityViolation";
    case ErrorCode::NotCovered: return "NotCovered";
    case ErrorCode::NoMinimalSet: return "NoMinimalSet";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::TooManyOpenSets: return "TooManyOpenSets";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidGlueData: return "InvalidGlueData";
    case ErrorCode::OverlapMismatch: return "OverlapMismatch";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::ResultNotHomeomorphism: return "ResultNotHomeomorphism";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::size_t> points)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      points_(std::move(points)) {}

}  // namespace alex
