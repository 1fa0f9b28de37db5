#include "uiforge/error.h"

namespace uiforge {

std::string_view to_string(IssueCode code) {
  switch (code) {
    case IssueCode::kOutOfRange:
      return "out-of-range";
    case IssueCode::kMalformedColor:
      return "malformed-color";
    case IssueCode::kUnknownEnumValue:
      return "unknown-enum-value";
    case IssueCode::kUnknownLockTarget:
      return "unknown-lock-target";
  }
  return "unknown";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidationFailed:
      return "validation-failed";
    case ErrorCode::kParseError:
      return "parse-error";
    case ErrorCode::kNotFound:
      return "not-found";
    case ErrorCode::kConflict:
      return "conflict";
    case ErrorCode::kUnauthorized:
      return "unauthorized";
    case ErrorCode::kForbidden:
      return "forbidden";
    case ErrorCode::kProviderError:
      return "provider-error";
    case ErrorCode::kGenerationMalformed:
      return "generation-malformed";
    case ErrorCode::kPayloadTooLarge:
      return "payload-too-large";
    case ErrorCode::kIoError:
      return "io-error";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "internal";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<ValidationIssue> issues)
    : std::runtime_error(message), code_(code), issues_(std::move(issues)) {}

}  // namespace uiforge
