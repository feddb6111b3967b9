#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vramsey {

enum class ErrorCode {
  MalformedInput,
  InvalidVertex,
  InvalidArgument,
  NotDegenerate,
  IsDegenerate,
  NotApplicable,
  UnsupportedPattern,
  SubsetSpaceTooLarge,
  TooLarge,
  ParamOutOfRange,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Three-valued answer for decisions that can run out of budget.
enum class Verdict { No, Yes, Unknown };

std::string_view verdict_name(Verdict v);

}  // namespace vramsey
