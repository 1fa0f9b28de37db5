#include "uiforge/engine.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <random>

#include "uiforge/crypto.h"
#include "uiforge/error.h"
#include "uiforge/html.h"

namespace uiforge {
namespace {

using Ms = std::chrono::milliseconds;

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::string> first_fenced_block(std::string_view raw) {
  std::size_t pos = 0;
  while (true) {
    std::size_t open = raw.find("```", pos);
    if (open == std::string_view::npos) return std::nullopt;
    std::size_t nl = raw.find('\n', open + 3);
    if (nl == std::string_view::npos) return std::nullopt;
    std::size_t close = raw.find("```", nl + 1);
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view body = trim(raw.substr(nl + 1, close - nl - 1));
    // Skip blocks with no markup, e.g. a shell snippet ahead of the page.
    if (body.find('<') != std::string_view::npos) return std::string(body);
    pos = close + 3;
  }
}

std::optional<std::string> document_span(std::string_view raw) {
  std::string low = lower(raw);
  std::size_t start = std::min(low.find("<!doctype"), low.find("<html"));
  std::size_t end = low.rfind("</html>");
  if (start == std::string::npos || end == std::string::npos || end < start) return std::nullopt;
  return std::string(raw.substr(start, end + 7 - start));
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

std::int64_t since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<Ms>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

VersionChain navigate(VersionChain chain, std::size_t index) {
  if (index >= chain.versions.size()) {
    throw Error(ErrorCode::kNotFound, "version " + std::to_string(index) + " does not exist in slot " +
                                          chain.slot_id);
  }
  chain.current_index = index;
  return chain;
}

std::unique_lock<std::mutex> SlotWriterLocks::acquire(const std::string& slot_id) {
  std::shared_ptr<std::mutex> m;
  {
    std::lock_guard lock(mu_);
    auto& slot = locks_[slot_id];
    if (!slot) slot = std::make_shared<std::mutex>();
    m = slot;
  }
  return std::unique_lock<std::mutex>(*m);
}

std::string extract_html(std::string_view raw_text) {
  if (auto block = first_fenced_block(raw_text)) return *block;
  if (auto span = document_span(raw_text)) return *span;
  throw Error(ErrorCode::kGenerationMalformed, "model reply contains no HTML document")
      .with_stage("extract");
}

std::string data_url(std::string_view mime, const Bytes& bytes) {
  return "data:" + std::string(mime) + ";base64," + base64_encode(bytes);
}

EngineConfig engine_config_from(const LlmSettings& settings) {
  EngineConfig config;
  config.model_id = settings.model_id;
  config.generation_temperature = settings.generation_temperature;
  config.edit_temperature = settings.edit_temperature;
  config.max_output_tokens = settings.max_output_tokens;
  return config;
}

VersionChain start_chain(GeneratedDesign first) {
  VersionChain chain;
  chain.slot_id = first.slot_id;
  chain.versions.push_back(std::move(first));
  chain.current_index = 0;
  return chain;
}

GenerationEngine::GenerationEngine(std::shared_ptr<const Catalog> catalog, PromptBuilder prompts,
                                   std::shared_ptr<LlmProvider> provider, EngineConfig config)
    : catalog_(catalog ? std::move(catalog) : std::make_shared<const Catalog>()),
      prompts_(std::move(prompts)),
      provider_(std::move(provider)),
      config_(std::move(config)) {
  if (!provider_) throw Error(ErrorCode::kInternal, "generation engine needs a provider");
  if (!config_.clock) config_.clock = system_clock();
}

std::vector<ImagePart> GenerationEngine::images_for(const PromptBundle& bundle) const {
  std::vector<ImagePart> images;
  if (bundle.attachment) {
    const ReferenceScreen* screen = catalog_->find(bundle.attachment->id);
    if (!screen) {
      throw Error(ErrorCode::kNotFound, "reference screen " + bundle.attachment->id + " not in catalog")
          .with_stage("catalog");
    }
    Bytes bytes = read_file(catalog_->image_file(*screen));
    std::string mime = sniff_image_mime(bytes).value_or("image/png");
    images.push_back({screen->id, std::move(mime), std::move(bytes)});
  }
  if (bundle.logo && config_.load_asset) {
    auto blob = config_.load_asset(bundle.logo->id);
    if (!blob) {
      throw Error(ErrorCode::kNotFound, "logo asset " + bundle.logo->id + " not found")
          .with_stage("assets");
    }
    images.push_back({bundle.logo->id, blob->mime, std::move(blob->bytes)});
  }
  return images;
}

CompletionResult GenerationEngine::call_provider(CompletionRequest request) const {
  try {
    require_valid(request);
    return provider_->complete(request);
  } catch (Error& e) {
    if (e.stage().empty()) e.with_stage("provider");
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kProviderError, e.what()).with_stage("provider");
  }
}

GeneratedDesign GenerationEngine::generate(const ConstraintSet& input,
                                           const GenerateOptions& options) const {
  auto t0 = std::chrono::steady_clock::now();
  ConstraintSet cs = normalized(input);
  require_valid(cs);

  Rng rng(options.seed ? *options.seed : std::random_device{}());
  std::optional<ReferenceScreen> reference = catalog_->query(cs.industry, cs.screen_type, rng);
  PromptBundle bundle = prompts_.build_user_prompt(cs, reference ? &*reference : nullptr);

  CompletionRequest request;
  request.system_text = bundle.system_text;
  request.user_text = bundle.user_text;
  request.images = images_for(bundle);
  request.model_id = config_.model_id;
  request.max_output_tokens = config_.max_output_tokens;
  request.temperature = config_.generation_temperature;
  request.tag = options.tag;

  auto t_call = std::chrono::steady_clock::now();
  CompletionResult result = call_provider(std::move(request));
  std::int64_t provider_ms = since(t_call);

  GeneratedDesign design;
  design.html_document = extract_html(result.raw_text);
  try {
    HtmlDocument::parse(design.html_document);
  } catch (const Error& e) {
    throw Error(ErrorCode::kGenerationMalformed, std::string("generated markup does not parse: ") + e.what())
        .with_stage("extract");
  }
  design.id = uuid_v4();
  design.slot_id = uuid_v4();
  design.constraints_snapshot = cs;
  if (reference) design.reference_screen_id = reference->id;
  design.prompt_fingerprint = bundle.fingerprint;
  design.created_at = format_timestamp(config_.clock());
  design.device_viewport = viewport_for(cs.device);
  design.provider_label = result.provider_label.empty() ? provider_->label() : result.provider_label;
  design.provider_ms = provider_ms;
  design.total_ms = since(t0);
  return design;
}

GeneratedDesign GenerationEngine::regenerate(const ConstraintSet& current, const ConstraintSet& incoming,
                                             const GenerateOptions& options) const {
  return generate(merge_preserving_locks(current, incoming), options);
}

VersionChain GenerationEngine::regenerate_with_edit(const VersionChain& chain,
                                                    const ModificationRequest& request,
                                                    const std::string& tag) const {
  auto t0 = std::chrono::steady_clock::now();
  const GeneratedDesign& base = chain.current();
  PromptBundle bundle = prompts_.build_edit_prompt(base.html_document, request);

  CompletionRequest req;
  req.system_text = bundle.system_text;
  req.user_text = bundle.user_text;
  req.model_id = config_.model_id;
  req.max_output_tokens = config_.max_output_tokens;
  req.temperature = config_.edit_temperature;
  req.tag = tag;

  auto t_call = std::chrono::steady_clock::now();
  CompletionResult result = call_provider(std::move(req));
  std::int64_t provider_ms = since(t_call);

  GeneratedDesign design;
  design.html_document = extract_html(result.raw_text);
  try {
    HtmlDocument::parse(design.html_document);
  } catch (const Error& e) {
    throw Error(ErrorCode::kGenerationMalformed, std::string("edited markup does not parse: ") + e.what())
        .with_stage("extract");
  }
  design.id = uuid_v4();
  design.slot_id = chain.slot_id;
  design.constraints_snapshot = base.constraints_snapshot;
  design.reference_screen_id = base.reference_screen_id;
  design.prompt_fingerprint = bundle.fingerprint;
  design.created_at = format_timestamp(config_.clock());
  design.device_viewport = base.device_viewport;
  design.edit = request;
  design.provider_label = result.provider_label.empty() ? provider_->label() : result.provider_label;
  design.provider_ms = provider_ms;
  design.total_ms = since(t0);

  VersionChain next = chain;
  next.versions.push_back(std::move(design));
  next.current_index = next.versions.size() - 1;
  return next;
}

VersionChain GenerationEngine::duplicate(const VersionChain& chain) const {
  VersionChain copy = chain;
  copy.slot_id = uuid_v4();
  for (auto& v : copy.versions) {
    v.id = uuid_v4();
    v.slot_id = copy.slot_id;
  }
  return copy;
}

PromptBundle GenerationEngine::rebuild_prompt(const GeneratedDesign& design) const {
  if (design.edit) {
    throw Error(ErrorCode::kValidationFailed, "edit versions are rebuilt from their version chain");
  }
  const ReferenceScreen* reference = nullptr;
  if (design.reference_screen_id) {
    reference = catalog_->find(*design.reference_screen_id);
    if (!reference) {
      throw Error(ErrorCode::kNotFound,
                  "reference screen " + *design.reference_screen_id + " not in catalog");
    }
  }
  return prompts_.build_user_prompt(design.constraints_snapshot, reference);
}

PromptBundle GenerationEngine::rebuild_prompt(const VersionChain& chain, std::size_t index) const {
  if (index >= chain.versions.size()) {
    throw Error(ErrorCode::kNotFound, "version " + std::to_string(index) + " does not exist");
  }
  const GeneratedDesign& design = chain.versions[index];
  if (!design.edit) return rebuild_prompt(design);
  if (index == 0) throw Error(ErrorCode::kValidationFailed, "edit version has no predecessor");
  return prompts_.build_edit_prompt(chain.versions[index - 1].html_document, *design.edit);
}

EvaluationContext GenerationEngine::evaluation_context(const GeneratedDesign& design) const {
  EvaluationContext ctx;
  ctx.design_id = design.id;
  ctx.declared_viewport = design.device_viewport;
  if (const auto& logo = design.constraints_snapshot.logo) {
    ctx.logo_refs.push_back(prompts_.logo_url(*logo));
    if (config_.load_asset) {
      if (auto blob = config_.load_asset(*logo)) ctx.logo_refs.push_back(data_url(blob->mime, blob->bytes));
    }
  }
  return ctx;
}

AdherenceReport GenerationEngine::evaluate(const GeneratedDesign& design) const {
  AdherenceReport report =
      uiforge::evaluate(design.html_document, design.constraints_snapshot, evaluation_context(design));
  report.evaluated_at = format_timestamp(config_.clock());
  return report;
}

std::vector<std::pair<std::string, std::string>> design_specifications(
    const GeneratedDesign& design, const PromptBuilder& prompts) {
  const ConstraintSet& cs = design.constraints_snapshot;
  std::vector<std::pair<std::string, std::string>> sheet = {
      {"Industry", cs.industry},
      {"Product Purpose", cs.product_purpose},
      {"Target Audience", cs.target_audience},
      {"Device", std::string(to_string(cs.device))},
      {"Screen Type", cs.screen_type},
      {"Colors", join(cs.colors)},
      {"Fonts", join(cs.fonts)},
  };
  if (cs.style) sheet.emplace_back("Style", std::string(to_string(*cs.style)));
  if (cs.logo) sheet.emplace_back("Logo URL", prompts.logo_url(*cs.logo));
  sheet.emplace_back("Others", cs.features_text);
  if (cs.design_theme) sheet.emplace_back("Design Theme", std::string(display_name(*cs.design_theme)));
  return sheet;
}

}  // namespace uiforge
