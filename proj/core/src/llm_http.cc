#include <httplib.h>

#include <nlohmann/json.hpp>

#include "uiforge/crypto.h"
#include "uiforge/error.h"
#include "uiforge/llm.h"

namespace uiforge {
namespace {

constexpr std::size_t kBodyExcerpt = 300;

// Splits "https://host:port/path" into ("https://host:port", "/path").
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  auto scheme = endpoint.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kValidationFailed, "LLM endpoint must be an absolute URL: " + endpoint);
  }
  auto slash = endpoint.find('/', scheme + 3);
  if (slash == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, slash), endpoint.substr(slash)};
}

class SemaphoreGuard {
 public:
  explicit SemaphoreGuard(std::counting_semaphore<1024>& s) : s_(s) { s_.acquire(); }
  ~SemaphoreGuard() { s_.release(); }
  SemaphoreGuard(const SemaphoreGuard&) = delete;
  SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

 private:
  std::counting_semaphore<1024>& s_;
};

std::ptrdiff_t clamp_in_flight(int requested) {
  if (requested < 1) return 1;
  return requested > 1024 ? 1024 : requested;
}

}  // namespace

HttpProvider::HttpProvider(HttpProviderConfig config)
    : config_(std::move(config)), in_flight_(clamp_in_flight(config_.max_in_flight)) {
  if (!config_.endpoint.empty()) std::tie(scheme_host_port_, path_) = split_endpoint(config_.endpoint);
}

std::string HttpProvider::request_body(const CompletionRequest& request) {
  nlohmann::ordered_json user_content = nlohmann::ordered_json::array();
  user_content.push_back({{"type", "text"}, {"text", request.user_text}});
  for (const auto& image : request.images) {
    user_content.push_back(
        {{"type", "image_url"},
         {"image_url", {{"url", "data:" + image.mime + ";base64," + base64_encode(image.data)}}}});
  }
  nlohmann::ordered_json body;
  body["model"] = request.model_id;
  body["messages"] = nlohmann::ordered_json::array(
      {{{"role", "system"}, {"content", request.system_text}},
       {{"role", "user"}, {"content", user_content}}});
  body["max_tokens"] = request.max_output_tokens;
  body["temperature"] = request.temperature;
  return body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

CompletionResult HttpProvider::complete(const CompletionRequest& request) {
  require_valid(request);
  if (config_.endpoint.empty()) {
    throw Error(ErrorCode::kProviderError, "LLM endpoint is not configured");
  }
  if (config_.api_key.empty()) {
    throw Error(ErrorCode::kProviderError, "LLM credential missing (set UIFORGE_LLM_API_KEY)");
  }
  const std::string body = request_body(request);

  SemaphoreGuard slot(in_flight_);
  auto started = std::chrono::steady_clock::now();
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);
  httplib::Headers headers = {{"Authorization", "Bearer " + config_.api_key}};
  auto response = client.Post(path_, headers, body, "application/json");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  if (!response) {
    auto err = response.error();
    std::string why = httplib::to_string(err);
    if (err == httplib::Error::Read || err == httplib::Error::Write ||
        err == httplib::Error::ConnectionTimeout) {
      why += " (timeout " + std::to_string(config_.timeout.count()) + " s)";
    }
    throw Error(ErrorCode::kProviderError, "LLM request failed: " + why);
  }
  if (response->status < 200 || response->status >= 300) {
    throw Error(ErrorCode::kProviderError,
                "LLM service returned HTTP " + std::to_string(response->status) + ": " +
                    response->body.substr(0, kBodyExcerpt))
        .with_http_status(response->status);
  }

  CompletionResult result;
  try {
    auto doc = nlohmann::json::parse(response->body);
    const auto& content = doc.at("choices").at(0).at("message").at("content");
    if (content.is_string()) {
      result.raw_text = content.get<std::string>();
    } else {
      for (const auto& part : content) {
        if (part.value("type", "") == "text") result.raw_text += part.value("text", "");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kProviderError,
                std::string("LLM response is not a chat completion: ") + e.what() + ": " +
                    response->body.substr(0, kBodyExcerpt))
        .with_http_status(response->status);
  }
  result.provider_label = label();
  result.latency_ms = elapsed;
  return result;
}

}  // namespace uiforge
