#include "thintree/error.hpp"

namespace thintree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kMalformedRotation: return "MalformedRotation";
    case ErrorCode::kBadTwin: return "BadTwin";
    case ErrorCode::kOddEulerDefect: return "OddEulerDefect";
    case ErrorCode::kNoCycle: return "NoCycle";
    case ErrorCode::kEdgeAbsent: return "EdgeAbsent";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kDegreeOneVertex: return "DegreeOneVertex";
    case ErrorCode::kNoLongThread: return "NoLongThread";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDichotomyViolation: return "DichotomyViolation";
    case ErrorCode::kNotEdgeConnected: return "NotEdgeConnected";
    case ErrorCode::kZeroGenus: return "ZeroGenus";
    case ErrorCode::kExtractionFailure: return "ExtractionFailure";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kIterationLimit: return "IterationLimit";
    case ErrorCode::kConnectivityShortfall: return "ConnectivityShortfall";
    case ErrorCode::kCirculationInfeasible: return "CirculationInfeasible";
    case ErrorCode::kCostBoundViolated: return "CostBoundViolated";
    case ErrorCode::kEmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotHamiltonian: return "NotHamiltonian";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kPrecondition: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace thintree
