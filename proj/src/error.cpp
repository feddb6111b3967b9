#include "vramsey/error.hpp"

namespace vramsey {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::IsDegenerate: return "IsDegenerate";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::SubsetSpaceTooLarge: return "SubsetSpaceTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace vramsey
