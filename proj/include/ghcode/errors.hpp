#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghcode {

enum class ErrorCode {
  InvalidArgument,
  ArithmeticOverflow,
  SequenceDegenerate,
  NotEncodable,
  InvalidPolicy,
  IncompleteCodeword,
  DecodedNonPositive,
  TrailingGarbage,
  CapacityExceeded,
  InfeasibleParamSet,
  BadMagic,
  UnsupportedVersion,
  CorruptHeader,
  RankOutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ghcode
