#include "test_support.h"

#include <fstream>
#include <iterator>
#include <random>

#include "uiforge/crypto.h"
#include "uiforge/suite.h"

namespace uiforge::testing {

TempDir::TempDir() {
  path_ = fs::temp_directory_path() / ("uiforge-test-" + random_hex(8));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path source_dir() { return UIFORGE_TEST_SOURCE_DIR; }
fs::path data_dir() { return UIFORGE_TEST_DATA_DIR; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const fs::path& path, std::string_view content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

Bytes gray_png(int w, int h, std::uint8_t level) { return encode_png(solid_image(w, h, level, level, level)); }

Bytes color_png(int w, int h) {
  RasterImage img = solid_image(w, h, 200, 40, 40);
  // Second color so the image is not trivially uniform.
  for (int x = 0; x < w / 2; ++x) {
    std::size_t p = static_cast<std::size_t>(x) * 3;
    img.pixels[p + 1] = 180;
  }
  return encode_png(img);
}

fs::path make_catalog(const fs::path& dir, const std::vector<std::string>& industries,
                      const std::vector<std::string>& screen_types,
                      const std::vector<std::vector<int>>& per_bucket) {
  fs::create_directories(dir / "images");
  std::string manifest = std::string(kManifestHeader) + "\n";
  Bytes png = gray_png(8, 8, 128);
  for (std::size_t i = 0; i < industries.size(); ++i) {
    for (std::size_t j = 0; j < screen_types.size(); ++j) {
      for (int k = 0; k < per_bucket[i][j]; ++k) {
        std::string id = "scr-" + std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(k);
        write_file(dir / "images" / (id + ".png"), std::string(png.begin(), png.end()));
        manifest += id + ",\"" + industries[i] + "\",\"" + screen_types[j] + "\",Desktop,images/" + id +
                    ".png,test\n";
      }
    }
  }
  write_file(dir / "manifest.csv", manifest);
  return dir / "manifest.csv";
}

std::vector<ConstraintSet> table3_sets() {
  std::vector<ConstraintSet> out;
  for (auto& b : load_briefs(data_dir() / "briefs" / "table3.json")) out.push_back(b.constraints);
  return out;
}

ThemeLibrary shipped_themes() { return ThemeLibrary::load(data_dir() / "themes"); }

PromptBuilder test_prompt_builder(std::string asset_base) {
  return PromptBuilder(shipped_themes(), [asset_base](std::string_view id) { return asset_base + "/" + std::string(id); });
}

CompletionResult ScriptedProvider::complete(const CompletionRequest& request) {
  {
    std::lock_guard lock(mu_);
    requests_.push_back(request);
  }
  return {script_(request), "scripted", 0};
}

std::vector<CompletionRequest> ScriptedProvider::requests() const {
  std::lock_guard lock(mu_);
  return requests_;
}

ConstraintSet random_constraint_set(Rng& rng) {
  static const OptionCatalog options = load_options(data_dir() / "options.json");
  auto pick = [&](const std::vector<std::string>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  auto text = [&] {
    static const char* kWords[] = {"fast", "friendly", "budget", "students", "teams", "family", "\"quoted\"",
                                   "ünïcode", "tab\there", "line\nbreak", ""};
    std::string out;
    int n = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < n; ++i) {
      if (!out.empty()) out += " ";
      out += kWords[std::uniform_int_distribution<int>(0, 10)(rng)];
    }
    return out;
  };
  ConstraintSet cs;
  cs.industry = pick(options.industries);
  cs.product_purpose = text();
  cs.target_audience = text();
  cs.device = kAllDevices[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
  cs.screen_type = pick(options.screen_types);
  int colors = std::uniform_int_distribution<int>(0, static_cast<int>(kMaxColors))(rng);
  for (int i = 0; i < colors; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%06X", std::uniform_int_distribution<unsigned>(0, 0xFFFFFF)(rng));
    cs.colors.push_back(buf);
  }
  int fonts = std::uniform_int_distribution<int>(0, static_cast<int>(kMaxFonts))(rng);
  for (int i = 0; i < fonts; ++i) cs.fonts.push_back(pick(options.fonts));
  if (coin()) cs.style = kAllStyles[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
  if (coin()) cs.design_theme = kAllThemes[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
  if (coin()) cs.logo = random_hex(16);
  cs.features_text = text();
  for (Field f : kAllFields) {
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) cs.locks.insert(f);
  }
  return cs;
}

}  // namespace uiforge::testing
