#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "uiforge/catalog.h"
#include "uiforge/constraints.h"
#include "uiforge/engine.h"
#include "uiforge/image.h"
#include "uiforge/llm.h"
#include "uiforge/prompt.h"

namespace uiforge::testing {

namespace fs = std::filesystem;

// Directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

fs::path source_dir();  // tests/
fs::path data_dir();    // shipped data/
std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view content);

Bytes gray_png(int w, int h, std::uint8_t level);
Bytes color_png(int w, int h);

// Writes a manifest with `per_bucket[i][j]` grayscale screens for
// (industries[i], screen_types[j]) and returns its path.
fs::path make_catalog(const fs::path& dir, const std::vector<std::string>& industries,
                      const std::vector<std::string>& screen_types,
                      const std::vector<std::vector<int>>& per_bucket);

// The five evaluation briefs shipped in data/briefs.
std::vector<ConstraintSet> table3_sets();

ThemeLibrary shipped_themes();
PromptBuilder test_prompt_builder(std::string asset_base = "https://assets.example.test/assets");

// Provider returning canned replies and recording requests.
class ScriptedProvider final : public LlmProvider {
 public:
  using Script = std::function<std::string(const CompletionRequest&)>;
  explicit ScriptedProvider(Script script) : script_(std::move(script)) {}
  CompletionResult complete(const CompletionRequest& request) override;
  std::string label() const override { return "scripted"; }
  std::vector<CompletionRequest> requests() const;

 private:
  Script script_;
  mutable std::mutex mu_;
  std::vector<CompletionRequest> requests_;
};

// Random valid constraint set drawn from shipped option lists.
ConstraintSet random_constraint_set(Rng& rng);

}  // namespace uiforge::testing
