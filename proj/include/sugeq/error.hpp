#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sugeq {

enum class ErrorCode {
  kNormalization,
  kMonotonicity,
  kRange,
  kUnknownLabel,
  kEmptySupport,
  kWeightSum,
  kDomainMismatch,
  kProductTooLarge,
  kIndex,
  kBadResolution,
  kBudgetExceeded,
  kEqualCapacities,
  kParse,
  kValidation,
  kInvalidArgument,
  kIo,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library is an Error carrying a code; the C API
// maps codes onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by capacity validation; names the first covering pair A ⊂ B (in
// ascending bitmask order) with value(A) > value(B).
class MonotonicityError : public Error {
 public:
  MonotonicityError(std::vector<std::string> smaller,
                    std::vector<std::string> larger);

  const std::vector<std::string>& smaller() const { return smaller_; }
  const std::vector<std::string>& larger() const { return larger_; }

 private:
  std::vector<std::string> smaller_;
  std::vector<std::string> larger_;
};

}  // namespace sugeq
