#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uiforge {

enum class IssueCode {
  kOutOfRange,
  kMalformedColor,
  kUnknownEnumValue,
  kUnknownLockTarget,
};

std::string_view to_string(IssueCode code);

// One constraint violation, reported by validation. Validation never throws;
// callers that must reject invalid input wrap the issues in an Error.
struct ValidationIssue {
  std::string field;
  IssueCode code;
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

enum class ErrorCode {
  kValidationFailed,
  kParseError,
  kNotFound,
  kConflict,
  kUnauthorized,
  kForbidden,
  kProviderError,
  kGenerationMalformed,
  kPayloadTooLarge,
  kIoError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Library-wide exception. Every failure surfaced by uiforge carries one of the
// closed ErrorCode values so the HTTP facade can map it without guessing.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message,
        std::vector<ValidationIssue> issues);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

  // Byte offset into the offending input, for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  Error& with_offset(std::size_t offset) {
    offset_ = offset;
    return *this;
  }

  // Pipeline stage that failed ("catalog", "provider", "extract", ...).
  const std::string& stage() const noexcept { return stage_; }
  Error& with_stage(std::string stage) {
    stage_ = std::move(stage);
    return *this;
  }

  // HTTP status and a short body excerpt, for provider failures.
  std::optional<int> http_status() const noexcept { return http_status_; }
  Error& with_http_status(int status) {
    http_status_ = status;
    return *this;
  }

 private:
  ErrorCode code_;
  std::vector<ValidationIssue> issues_;
  std::optional<std::size_t> offset_;
  std::string stage_;
  std::optional<int> http_status_;
};

}  // namespace uiforge
