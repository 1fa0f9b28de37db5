#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/image.h"

namespace uiforge {

struct ImagePart {
  std::string id;
  std::string mime;  // "image/png", "image/jpeg"
  Bytes data;
};

inline constexpr std::size_t kMaxImageParts = 2;

struct CompletionRequest {
  std::string system_text;
  std::string user_text;
  std::vector<ImagePart> images;
  std::string model_id;
  int max_output_tokens = 8192;
  double temperature = 0.9;
  // Free-form caller label carried for tracing and test hooks; never sent
  // over the wire.
  std::string tag;
};

// Throws Error(kValidationFailed) when model_id is empty, temperature is
// outside [0, 2] or more than two images are attached.
void require_valid(const CompletionRequest& request);

struct CompletionResult {
  std::string raw_text;
  std::string provider_label;
  std::int64_t latency_ms = 0;
};

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;
  // Thread-safe. Throws Error(kProviderError) on transport or service failure.
  virtual CompletionResult complete(const CompletionRequest& request) = 0;
  virtual std::string label() const = 0;
};

// Decides how many trailing fonts the stub omits for a given request.
using FontDropRule = std::function<std::size_t(const CompletionRequest&)>;

// Rule reading "set=<i>;variation=<j>" from the request tag and returning
// schedule[i][j] (0 when out of range or untagged).
FontDropRule font_drop_schedule(std::vector<std::vector<std::size_t>> schedule);

// Parses "key=value;key=value" tags.
std::map<std::string, std::string> parse_tag(std::string_view tag);

struct StubOptions {
  FontDropRule drop_fonts;
};

// Deterministic offline model. For a generation prompt it reads the
// specification block and writes a page that uses every listed color and
// font, fits the device viewport and embeds the logo; for an edit prompt it
// returns the original document annotated with the requested change.
class StubProvider final : public LlmProvider {
 public:
  explicit StubProvider(StubOptions options = {});
  CompletionResult complete(const CompletionRequest& request) override;
  std::string label() const override { return "stub"; }

  // "- Label: value" lines of the specification block, keyed by label.
  static std::map<std::string, std::string> parse_specification(std::string_view user_text);

 private:
  StubOptions options_;
};

struct HttpProviderConfig {
  std::string endpoint;  // e.g. https://api.openai.com/v1/chat/completions
  std::string api_key;
  std::chrono::seconds timeout{120};
  int max_in_flight = 4;
};

// Chat-completion client: one system message, one user message whose content
// parts are the text followed by data-URL image parts. Never retries.
class HttpProvider final : public LlmProvider {
 public:
  explicit HttpProvider(HttpProviderConfig config);
  CompletionResult complete(const CompletionRequest& request) override;
  std::string label() const override { return "http"; }

  // JSON request body, exposed for tests.
  static std::string request_body(const CompletionRequest& request);

 private:
  HttpProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
};

enum class ProviderKind { kStub, kHttp };

struct LlmSettings {
  ProviderKind kind = ProviderKind::kStub;
  HttpProviderConfig http;
  std::string model_id = "gpt-4o";
  double generation_temperature = 0.9;
  double edit_temperature = 0.2;
  int max_output_tokens = 8192;
};

// Reads UIFORGE_LLM_* environment variables over `base`: PROVIDER (stub|http),
// ENDPOINT, API_KEY, MODEL, TIMEOUT (seconds), CONCURRENCY.
LlmSettings llm_settings_from_env(LlmSettings base = {});

// Same keys in a JSON config object: {"provider","endpoint","api_key",
// "model","timeout_seconds","concurrency","generation_temperature",
// "edit_temperature","max_output_tokens"}.
LlmSettings llm_settings_from_file(const std::string& path, LlmSettings base = {});

std::unique_ptr<LlmProvider> make_provider(const LlmSettings& settings,
                                           StubOptions stub_options = {});

}  // namespace uiforge
