#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thintree {

enum class ErrorCode {
  kParse,
  kMalformedRotation,
  kBadTwin,
  kOddEulerDefect,
  kNoCycle,
  kEdgeAbsent,
  kParityViolation,
  kDegreeOneVertex,
  kNoLongThread,
  kDisconnected,
  kDichotomyViolation,
  kNotEdgeConnected,
  kZeroGenus,
  kExtractionFailure,
  kInfeasible,
  kIterationLimit,
  kConnectivityShortfall,
  kCirculationInfeasible,
  kCostBoundViolated,
  kEmbeddingMismatch,
  kTooLarge,
  kNotHamiltonian,
  kBadParams,
  kPrecondition,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures surface as this exception; `code()` identifies the
/// contract that was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thintree
