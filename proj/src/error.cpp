#include "sugeq/error.hpp"

namespace sugeq {

namespace {

std::string braces(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNormalization: return "NormalizationError";
    case ErrorCode::kMonotonicity: return "MonotonicityError";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kWeightSum: return "WeightSumError";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kProductTooLarge: return "ProductTooLarge";
    case ErrorCode::kIndex: return "IndexError";
    case ErrorCode::kBadResolution: return "BadResolution";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kEqualCapacities: return "EqualCapacities";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

MonotonicityError::MonotonicityError(std::vector<std::string> smaller,
                                     std::vector<std::string> larger)
    : Error(ErrorCode::kMonotonicity,
            "capacity is not monotone: value(" + braces(smaller) +
                ") > value(" + braces(larger) + ")"),
      smaller_(std::move(smaller)),
      larger_(std::move(larger)) {}

}  // namespace sugeq
