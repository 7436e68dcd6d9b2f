#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace alex {

enum class ErrorCode {
  // core
  ReflexivityViolation,
  MinimalityViolation,
  NotCovered,
  NoMinimalSet,
  NotATopology,
  NotReflexive,
  NotTransitive,
  TooManyOpenSets,
  // constructions
  SizeOverflow,
  PartitionMismatch,
  // maps
  NotContinuous,
  NotOpen,
  SearchBudgetExceeded,
  InvalidGlueData,
  OverlapMismatch,
  NotWellDefined,
  ResultNotHomeomorphism,
  // invariants, census
  EmptySpace,
  TooLarge,
  // documents
  SyntaxError,
  ValidationError,
  // misuse of an API (bad ids, mismatched lengths)
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported with this exception. `points()` carries the
// witness point ids named by the error (e.g. {x, y} for MinimalityViolation).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> points = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& points() const noexcept { return points_; }

private:
  ErrorCode code_;
  std::vector<std::size_t> points_;
};

}  // namespace alex
