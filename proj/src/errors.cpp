#include "ghcode/errors.hpp"

namespace ghcode {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::SequenceDegenerate: return "SequenceDegenerate";
    case ErrorCode::NotEncodable: return "NotEncodable";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::IncompleteCodeword: return "IncompleteCodeword";
    case ErrorCode::DecodedNonPositive: return "DecodedNonPositive";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InfeasibleParamSet: return "InfeasibleParamSet";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::CorruptHeader: return "CorruptHeader";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
  }
  return "Unknown";
}

}  // namespace ghcode
