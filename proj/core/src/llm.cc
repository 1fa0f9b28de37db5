#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "uiforge/error.h"
#include "uiforge/llm.h"

namespace uiforge {

void require_valid(const CompletionRequest& request) {
  if (request.model_id.empty()) {
    throw Error(ErrorCode::kValidationFailed, "completion request has no model id");
  }
  if (!(request.temperature >= 0.0 && request.temperature <= 2.0)) {
    throw Error(ErrorCode::kValidationFailed, "temperature must be within [0, 2]");
  }
  if (request.images.size() > kMaxImageParts) {
    throw Error(ErrorCode::kValidationFailed, "at most two image attachments are supported");
  }
}

std::map<std::string, std::string> parse_tag(std::string_view tag) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < tag.size()) {
    std::size_t end = tag.find(';', start);
    if (end == std::string_view::npos) end = tag.size();
    std::string_view part = tag.substr(start, end - start);
    if (auto eq = part.find('='); eq != std::string_view::npos) {
      out.emplace(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
    }
    start = end + 1;
  }
  return out;
}

FontDropRule font_drop_schedule(std::vector<std::vector<std::size_t>> schedule) {
  return [schedule = std::move(schedule)](const CompletionRequest& request) -> std::size_t {
    auto fields = parse_tag(request.tag);
    auto set = fields.find("set");
    auto variation = fields.find("variation");
    if (set == fields.end() || variation == fields.end()) return 0;
    try {
      std::size_t i = std::stoul(set->second);
      std::size_t j = std::stoul(variation->second);
      if (i < schedule.size() && j < schedule[i].size()) return schedule[i][j];
    } catch (const std::exception&) {
    }
    return 0;
  };
}

LlmSettings llm_settings_from_env(LlmSettings base) {
  auto env = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
  };
  if (const char* v = env("UIFORGE_LLM_PROVIDER")) {
    std::string kind = v;
    if (kind == "http") {
      base.kind = ProviderKind::kHttp;
    } else if (kind == "stub") {
      base.kind = ProviderKind::kStub;
    } else {
      throw Error(ErrorCode::kValidationFailed, "UIFORGE_LLM_PROVIDER must be stub or http");
    }
  }
  if (const char* v = env("UIFORGE_LLM_ENDPOINT")) base.http.endpoint = v;
  if (const char* v = env("UIFORGE_LLM_API_KEY")) base.http.api_key = v;
  if (const char* v = env("UIFORGE_LLM_MODEL")) base.model_id = v;
  try {
    if (const char* v = env("UIFORGE_LLM_TIMEOUT")) base.http.timeout = std::chrono::seconds(std::stol(v));
    if (const char* v = env("UIFORGE_LLM_CONCURRENCY")) base.http.max_in_flight = std::stoi(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kValidationFailed, "UIFORGE_LLM_TIMEOUT/CONCURRENCY must be integers");
  }
  return base;
}

LlmSettings llm_settings_from_file(const std::string& path, LlmSettings base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open config file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.contains("llm")) doc = doc["llm"];
    if (auto it = doc.find("provider"); it != doc.end()) {
      base.kind = it->get<std::string>() == "http" ? ProviderKind::kHttp : ProviderKind::kStub;
    }
    base.http.endpoint = doc.value("endpoint", base.http.endpoint);
    base.http.api_key = doc.value("api_key", base.http.api_key);
    base.model_id = doc.value("model", base.model_id);
    base.http.timeout = std::chrono::seconds(doc.value("timeout_seconds", base.http.timeout.count()));
    base.http.max_in_flight = doc.value("concurrency", base.http.max_in_flight);
    base.generation_temperature = doc.value("generation_temperature", base.generation_temperature);
    base.edit_temperature = doc.value("edit_temperature", base.edit_temperature);
    base.max_output_tokens = doc.value("max_output_tokens", base.max_output_tokens);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, "config file " + path + ": " + e.what());
  }
  return base;
}

std::unique_ptr<LlmProvider> make_provider(const LlmSettings& settings, StubOptions stub_options) {
  if (settings.kind == ProviderKind::kHttp) return std::make_unique<HttpProvider>(settings.http);
  return std::make_unique<StubProvider>(std::move(stub_options));
}

}  // namespace uiforge
