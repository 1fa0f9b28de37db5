#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uiforge/constraints.h"

namespace uiforge {

// Seedable random source used wherever selection must be replayable.
using Rng = std::mt19937_64;

// Dropdown option lists the UI offers. Loaded from a data file so new
// industries or screen types need no rebuild.
struct OptionCatalog {
  std::vector<std::string> industries;
  std::vector<std::string> screen_types;
  std::vector<std::string> styles;
  std::vector<std::string> themes;
  std::vector<std::string> fonts;

  bool has_industry(std::string_view id) const;
  bool has_screen_type(std::string_view id) const;
};

OptionCatalog load_options(const std::filesystem::path& path);
std::string options_to_json(const OptionCatalog& options);

struct ReferenceScreen {
  std::string id;
  std::string industry;
  std::string screen_type;
  Device device = Device::kDesktop;
  std::string image_path;  // relative to the manifest's directory
  std::string source_label;

  friend bool operator==(const ReferenceScreen&, const ReferenceScreen&) = default;
};

// Most screens kept per (industry, screen type, device) bucket.
inline constexpr std::size_t kMaxScreensPerBucket = 50;

inline constexpr const char* kManifestHeader =
    "id,industry,screen_type,device,image_path,source_label";

// Immutable index of grayscale reference screens. Lookup is keyed on
// (industry, screen type) only; device is metadata.
class Catalog {
 public:
  Catalog() = default;
  Catalog(std::filesystem::path root, std::vector<ReferenceScreen> screens);

  const std::filesystem::path& root() const { return root_; }
  const std::vector<ReferenceScreen>& screens() const { return screens_; }
  std::size_t size() const { return screens_.size(); }
  std::size_t key_count() const { return index_.size(); }

  // Screens matching (industry, screen_type), in manifest order.
  std::vector<const ReferenceScreen*> bucket(std::string_view industry,
                                             std::string_view screen_type) const;
  const ReferenceScreen* find(std::string_view id) const;
  std::filesystem::path image_file(const ReferenceScreen& screen) const;

  // One uniformly chosen member of the matching bucket, or nullopt when no
  // screen matches.
  std::optional<ReferenceScreen> query(std::string_view industry, std::string_view screen_type,
                                       Rng& rng) const;

 private:
  std::filesystem::path root_;
  std::vector<ReferenceScreen> screens_;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>, std::less<>> index_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Reads a manifest CSV. Throws Error(kNotFound) for a missing manifest or
// image file, Error(kParseError) for a malformed row and Error(kConflict)
// for duplicate ids or an over-full bucket; messages name the entry.
Catalog load_catalog(const std::filesystem::path& manifest_path);

// Converts the image to grayscale, writes it under images/ next to the
// manifest and appends a manifest row. Rejects unknown option ids and the
// 51st screen of a bucket.
ReferenceScreen ingest_screen(const std::filesystem::path& manifest_path,
                              const OptionCatalog& options,
                              std::span<const std::uint8_t> image_bytes,
                              const std::string& industry, const std::string& screen_type,
                              Device device, const std::string& source_label);

// Full consistency audit: loads the manifest, decodes every image and checks
// it is grayscale. Returns human-readable problems; empty means healthy.
std::vector<std::string> verify_catalog(const std::filesystem::path& manifest_path);

}  // namespace uiforge
