#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/adherence.h"
#include "uiforge/catalog.h"
#include "uiforge/clock.h"
#include "uiforge/constraints.h"
#include "uiforge/image.h"
#include "uiforge/llm.h"
#include "uiforge/prompt.h"

namespace uiforge {

struct GeneratedDesign {
  std::string id;
  std::string slot_id;
  std::string html_document;
  ConstraintSet constraints_snapshot;
  std::optional<std::string> reference_screen_id;
  std::string prompt_fingerprint;
  std::string created_at;
  Viewport device_viewport;
  // The edit that produced this version; absent for a fresh generation.
  std::optional<ModificationRequest> edit;
  std::string provider_label;
  std::int64_t provider_ms = 0;
  std::int64_t total_ms = 0;
};

// Ordered, append-only history of one canvas slot.
struct VersionChain {
  std::string slot_id;
  std::vector<GeneratedDesign> versions;
  std::size_t current_index = 0;

  const GeneratedDesign& current() const { return versions.at(current_index); }
};

// Moves the current pointer. Throws Error(kNotFound) for an index past the
// end; versions are untouched.
VersionChain navigate(VersionChain chain, std::size_t index);

// Pulls the HTML document out of a model reply: the first fenced block, or
// failing that the span from the doctype/<html> opener to the last </html>.
// Throws Error(kGenerationMalformed) when neither is present.
std::string extract_html(std::string_view raw_text);

struct AssetBlob {
  std::string mime;
  Bytes bytes;
};
using AssetLoader = std::function<std::optional<AssetBlob>(std::string_view asset_id)>;

struct EngineConfig {
  std::string model_id = "gpt-4o";
  double generation_temperature = 0.9;
  double edit_temperature = 0.2;
  int max_output_tokens = 8192;
  AssetLoader load_asset;  // resolves logo asset ids; may be empty
  Clock clock = system_clock();
};

EngineConfig engine_config_from(const LlmSettings& settings);

struct GenerateOptions {
  // Reference-screen draw seed; a random one is used when absent.
  std::optional<std::uint64_t> seed;
  std::string tag;  // forwarded on the provider request
};

class GenerationEngine {
 public:
  GenerationEngine(std::shared_ptr<const Catalog> catalog, PromptBuilder prompts,
                   std::shared_ptr<LlmProvider> provider, EngineConfig config = {});

  // Validates, draws a reference screen, builds the prompt and calls the
  // provider once. The result starts a new slot.
  GeneratedDesign generate(const ConstraintSet& cs, const GenerateOptions& options = {}) const;

  // Panel merge then generate: locked fields of `current` survive.
  GeneratedDesign regenerate(const ConstraintSet& current, const ConstraintSet& incoming,
                             const GenerateOptions& options = {}) const;

  // Edits the chain's current version and returns the chain with the result
  // appended and made current.
  VersionChain regenerate_with_edit(const VersionChain& chain, const ModificationRequest& request,
                                    const std::string& tag = {}) const;

  // Independent copy under a new slot id, sharing no state with the source.
  VersionChain duplicate(const VersionChain& chain) const;

  // Rebuilds the prompt a design was generated from. Edit versions need
  // their predecessor, so they go through the chain overload.
  PromptBundle rebuild_prompt(const GeneratedDesign& design) const;
  PromptBundle rebuild_prompt(const VersionChain& chain, std::size_t index) const;

  EvaluationContext evaluation_context(const GeneratedDesign& design) const;
  AdherenceReport evaluate(const GeneratedDesign& design) const;

  const Catalog& catalog() const { return *catalog_; }
  const PromptBuilder& prompts() const { return prompts_; }
  const EngineConfig& config() const { return config_; }

 private:
  std::vector<ImagePart> images_for(const PromptBundle& bundle) const;
  CompletionResult call_provider(CompletionRequest request) const;

  std::shared_ptr<const Catalog> catalog_;
  PromptBuilder prompts_;
  std::shared_ptr<LlmProvider> provider_;
  EngineConfig config_;
};

VersionChain start_chain(GeneratedDesign first);

// Single writer per slot: holders of a slot's lock may read, edit and save its
// chain; other slots proceed in parallel.
class SlotWriterLocks {
 public:
  std::unique_lock<std::mutex> acquire(const std::string& slot_id);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<std::mutex>> locks_;
};

// Label/value sheet of the constraints a design was generated from, in
// specification-block order.
std::vector<std::pair<std::string, std::string>> design_specifications(
    const GeneratedDesign& design, const PromptBuilder& prompts);

std::string data_url(std::string_view mime, const Bytes& bytes);

}  // namespace uiforge
