#include "uiforge/catalog.h"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "csv.h"
#include "uiforge/crypto.h"
#include "uiforge/error.h"
#include "uiforge/image.h"

namespace uiforge {
namespace fs = std::filesystem;
namespace {

std::mutex& ingest_mutex() {
  static std::mutex m;
  return m;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Bytes read_bytes(const fs::path& path) {
  std::string s = read_file(path);
  return Bytes(s.begin(), s.end());
}

std::vector<ReferenceScreen> parse_manifest(std::string_view text) {
  std::vector<ReferenceScreen> screens;
  auto rows = detail::parse_csv(text);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (r == 0 && !row.cells.empty() && row.cells[0] == "id") continue;
    if (row.cells.size() != 6) {
      throw Error(ErrorCode::kParseError,
                  "manifest line " + std::to_string(row.line) + ": expected 6 cells, got " +
                      std::to_string(row.cells.size()));
    }
    ReferenceScreen s;
    s.id = row.cells[0];
    s.industry = row.cells[1];
    s.screen_type = row.cells[2];
    auto device = parse_device(row.cells[3]);
    if (!device) {
      throw Error(ErrorCode::kParseError, "manifest line " + std::to_string(row.line) +
                                              " (" + s.id + "): unknown device '" +
                                              row.cells[3] + "'");
    }
    s.device = *device;
    s.image_path = row.cells[4];
    s.source_label = row.cells[5];
    if (s.id.empty() || s.industry.empty() || s.screen_type.empty() || s.image_path.empty()) {
      throw Error(ErrorCode::kParseError,
                  "manifest line " + std::to_string(row.line) + ": empty required cell");
    }
    screens.push_back(std::move(s));
  }
  return screens;
}

void check_bucket_caps(const std::vector<ReferenceScreen>& screens) {
  std::map<std::tuple<std::string, std::string, Device>, std::size_t> counts;
  for (const auto& s : screens) {
    auto n = ++counts[{s.industry, s.screen_type, s.device}];
    if (n > kMaxScreensPerBucket) {
      throw Error(ErrorCode::kConflict, "bucket (" + s.industry + ", " + s.screen_type + ", " +
                                            std::string(to_string(s.device)) + ") exceeds " +
                                            std::to_string(kMaxScreensPerBucket) +
                                            " screens at entry " + s.id);
    }
  }
}

std::vector<std::string> string_list(const nlohmann::json& doc, const char* key) {
  std::vector<std::string> out;
  if (auto it = doc.find(key); it != doc.end()) {
    for (const auto& v : *it) out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

bool OptionCatalog::has_industry(std::string_view id) const {
  return std::find(industries.begin(), industries.end(), id) != industries.end();
}

bool OptionCatalog::has_screen_type(std::string_view id) const {
  return std::find(screen_types.begin(), screen_types.end(), id) != screen_types.end();
}

OptionCatalog load_options(const fs::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, "option file " + path.string() + ": " + e.what());
  }
  OptionCatalog out;
  out.industries = string_list(doc, "industries");
  out.screen_types = string_list(doc, "screen_types");
  out.styles = string_list(doc, "styles");
  out.themes = string_list(doc, "themes");
  out.fonts = string_list(doc, "fonts");
  return out;
}

std::string options_to_json(const OptionCatalog& options) {
  nlohmann::ordered_json doc;
  doc["industries"] = options.industries;
  doc["screen_types"] = options.screen_types;
  doc["devices"] = {"Desktop", "Mobile", "Tablet"};
  doc["styles"] = options.styles;
  doc["themes"] = options.themes;
  doc["fonts"] = options.fonts;
  return doc.dump(2) + "\n";
}

Catalog::Catalog(fs::path root, std::vector<ReferenceScreen> screens)
    : root_(std::move(root)), screens_(std::move(screens)) {
  for (std::size_t i = 0; i < screens_.size(); ++i) {
    const auto& s = screens_[i];
    if (!by_id_.emplace(s.id, i).second) {
      throw Error(ErrorCode::kConflict, "duplicate reference screen id '" + s.id + "'");
    }
    index_[{s.industry, s.screen_type}].push_back(i);
  }
}

std::vector<const ReferenceScreen*> Catalog::bucket(std::string_view industry,
                                                    std::string_view screen_type) const {
  std::vector<const ReferenceScreen*> out;
  auto it = index_.find(std::pair{std::string(industry), std::string(screen_type)});
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&screens_[i]);
  return out;
}

const ReferenceScreen* Catalog::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &screens_[it->second];
}

fs::path Catalog::image_file(const ReferenceScreen& screen) const {
  return root_ / screen.image_path;
}

std::optional<ReferenceScreen> Catalog::query(std::string_view industry,
                                              std::string_view screen_type, Rng& rng) const {
  auto it = index_.find(std::pair{std::string(industry), std::string(screen_type)});
  if (it == index_.end() || it->second.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, it->second.size() - 1);
  return screens_[it->second[pick(rng)]];
}

Catalog load_catalog(const fs::path& manifest_path) {
  if (!fs::exists(manifest_path)) {
    throw Error(ErrorCode::kNotFound, "catalog manifest not found: " + manifest_path.string());
  }
  auto screens = parse_manifest(read_file(manifest_path));
  const fs::path root = manifest_path.parent_path();
  for (const auto& s : screens) {
    if (!fs::is_regular_file(root / s.image_path)) {
      throw Error(ErrorCode::kNotFound,
                  "reference screen " + s.id + ": image missing at " + s.image_path);
    }
  }
  check_bucket_caps(screens);
  return Catalog(root, std::move(screens));
}

ReferenceScreen ingest_screen(const fs::path& manifest_path, const OptionCatalog& options,
                              std::span<const std::uint8_t> image_bytes,
                              const std::string& industry, const std::string& screen_type,
                              Device device, const std::string& source_label) {
  if (!options.has_industry(industry)) {
    throw Error(ErrorCode::kValidationFailed, "unknown industry '" + industry + "'");
  }
  if (!options.has_screen_type(screen_type)) {
    throw Error(ErrorCode::kValidationFailed, "unknown screen type '" + screen_type + "'");
  }
  RasterImage gray = to_grayscale(decode_image(image_bytes));

  std::lock_guard lock(ingest_mutex());
  std::vector<ReferenceScreen> existing;
  if (fs::exists(manifest_path)) existing = parse_manifest(read_file(manifest_path));
  auto same_bucket = std::count_if(existing.begin(), existing.end(), [&](const auto& s) {
    return s.industry == industry && s.screen_type == screen_type && s.device == device;
  });
  if (static_cast<std::size_t>(same_bucket) >= kMaxScreensPerBucket) {
    throw Error(ErrorCode::kConflict, "bucket (" + industry + ", " + screen_type + ", " +
                                          std::string(to_string(device)) + ") already holds " +
                                          std::to_string(kMaxScreensPerBucket) + " screens");
  }

  ReferenceScreen screen;
  do {
    screen.id = "scr-" + random_hex(6);
  } while (std::any_of(existing.begin(), existing.end(),
                       [&](const auto& s) { return s.id == screen.id; }));
  screen.industry = industry;
  screen.screen_type = screen_type;
  screen.device = device;
  screen.image_path = "images/" + screen.id + ".png";
  screen.source_label = source_label;

  const fs::path root = manifest_path.parent_path();
  fs::create_directories(root / "images");
  Bytes png = encode_png(gray);
  {
    std::ofstream out(root / screen.image_path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + screen.image_path);
  }

  const bool fresh = !fs::exists(manifest_path) || fs::file_size(manifest_path) == 0;
  std::string tail;
  if (!fresh) {
    std::string text = read_file(manifest_path);
    if (!text.empty() && text.back() != '\n') tail = "\n";
  }
  std::ofstream manifest(manifest_path, std::ios::app | std::ios::binary);
  if (fresh) manifest << kManifestHeader << "\n";
  manifest << tail
           << detail::csv_row({screen.id, screen.industry, screen.screen_type,
                               std::string(to_string(screen.device)), screen.image_path,
                               screen.source_label})
           << "\n";
  if (!manifest) throw Error(ErrorCode::kIoError, "cannot append to " + manifest_path.string());
  return screen;
}

std::vector<std::string> verify_catalog(const fs::path& manifest_path) {
  std::vector<std::string> problems;
  Catalog catalog;
  try {
    catalog = load_catalog(manifest_path);
  } catch (const Error& e) {
    problems.emplace_back(e.what());
    return problems;
  }
  for (const auto& s : catalog.screens()) {
    try {
      RasterImage img = decode_image(read_bytes(catalog.image_file(s)));
      if (!is_grayscale(img)) problems.push_back(s.id + ": image is not grayscale");
    } catch (const Error& e) {
      problems.push_back(s.id + ": " + e.what());
    }
  }
  return problems;
}

}  // namespace uiforge
