#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/clock.h"
#include "uiforge/constraints.h"
#include "uiforge/engine.h"
#include "uiforge/image.h"

struct sqlite3;

namespace uiforge {

struct UserAccount {
  std::string id;
  std::string login;
  std::string created_at;
};

struct SessionToken {
  std::string token;
  std::string user_id;
  std::string expires_at;
};

// Placement of one design slot on the infinite canvas.
struct CanvasSlot {
  std::string slot_id;
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;
  int z = 0;
  friend bool operator==(const CanvasSlot&, const CanvasSlot&) = default;
};

struct Canvas {
  std::string id;  // empty when not yet saved
  std::string owner_user_id;
  std::string name;
  std::vector<CanvasSlot> slots;
  ConstraintSet panel_state;
  std::string saved_at;
  std::optional<std::string> preview_asset_id;
};

struct CanvasSummary {
  std::string id;
  std::string name;
  std::string saved_at;
  std::size_t slot_count = 0;
  std::optional<std::string> preview_asset_id;
};

// Frozen copy of a design at save time.
struct FavoriteEntry {
  std::string id;
  std::string html_document;
  ConstraintSet constraints_snapshot;
  std::string thumbnail_asset_id;
  std::string saved_at;
  std::string source_design_id;
};

struct FavoritesFolder {
  std::string id;
  std::string owner_user_id;
  std::string name;
  std::vector<FavoriteEntry> entries;
};

struct FolderSummary {
  std::string id;
  std::string name;
  std::size_t entry_count = 0;
  std::optional<std::string> preview_asset_id;  // newest entry's thumbnail
};

enum class AssetKind { kLogo, kThumbnail, kReferenceImage };
std::string_view to_string(AssetKind kind);
std::optional<AssetKind> parse_asset_kind(std::string_view name);

struct StoredAsset {
  std::string id;
  std::string owner_user_id;
  AssetKind kind = AssetKind::kLogo;
  std::string mime;
  std::size_t size_bytes = 0;
  std::string created_at;
};

inline constexpr std::size_t kMaxAssetBytes = 5 * 1024 * 1024;

// Renders a preview image for a design. When unset, thumbnails are solid
// placeholders in the design's first color.
using ThumbnailRenderer = std::function<std::optional<Bytes>(std::string_view html, Viewport)>;

struct StoreOptions {
  Clock clock = system_clock();
  std::chrono::hours session_lifetime{24};
  // Password hashing cost; the defaults are libsodium's interactive limits.
  unsigned long long pwhash_opslimit = 0;
  std::size_t pwhash_memlimit = 0;
  std::size_t max_asset_bytes = kMaxAssetBytes;
  ThumbnailRenderer render_thumbnail;
};

// Durable per-user workspace: accounts, sessions, canvases, favorites,
// assets and version chains, kept in one SQLite database plus an assets/
// directory under the data dir. One process owns a data dir at a time.
//
// Every owner-scoped call throws Error(kNotFound) for a missing record and
// Error(kForbidden) for a record owned by someone else.
class WorkspaceStore {
 public:
  // Throws Error(kConflict) when another process holds the data dir.
  static std::unique_ptr<WorkspaceStore> open(const std::filesystem::path& data_dir,
                                              StoreOptions options = {});
  ~WorkspaceStore();
  WorkspaceStore(const WorkspaceStore&) = delete;
  WorkspaceStore& operator=(const WorkspaceStore&) = delete;

  const std::filesystem::path& data_dir() const { return data_dir_; }

  // Accounts and sessions. Login failures throw Error(kUnauthorized) without
  // saying which half was wrong.
  UserAccount add_user(const std::string& login, const std::string& password);
  SessionToken login(const std::string& login, const std::string& password);
  void logout(const std::string& token);
  // Throws Error(kUnauthorized) for unknown or expired tokens.
  UserAccount authenticate(const std::string& token);

  // Version chains. Saving appends versions not yet stored and moves the
  // current pointer; stored versions are never rewritten.
  void save_chain(const std::string& owner, const VersionChain& chain);
  VersionChain load_chain(const std::string& owner, const std::string& slot_id);
  std::vector<std::string> list_slots(const std::string& owner);

  Canvas save_canvas(const std::string& owner, Canvas canvas);
  Canvas load_canvas(const std::string& owner, const std::string& canvas_id);
  // Newest first.
  std::vector<CanvasSummary> list_canvases(const std::string& owner);
  void delete_canvas(const std::string& owner, const std::string& canvas_id);

  FavoritesFolder create_folder(const std::string& owner, const std::string& name);
  std::vector<FolderSummary> list_folders(const std::string& owner);
  FavoritesFolder load_folder(const std::string& owner, const std::string& folder_id);
  void delete_folder(const std::string& owner, const std::string& folder_id);
  FavoriteEntry save_to_favorites(const std::string& owner, const std::string& folder_id,
                                  const GeneratedDesign& design);
  void delete_favorite(const std::string& owner, const std::string& folder_id,
                       const std::string& entry_id);

  // Accepts PNG or JPEG up to max_asset_bytes.
  StoredAsset store_asset(const std::string& owner, const Bytes& bytes, AssetKind kind);
  StoredAsset asset_info(const std::string& asset_id);
  // Metadata and content by id alone; ids are unguessable.
  std::optional<std::pair<StoredAsset, Bytes>> read_asset(const std::string& asset_id);
  std::vector<StoredAsset> list_assets(const std::string& owner);
  void delete_asset(const std::string& owner, const std::string& asset_id);

 private:
  WorkspaceStore(std::filesystem::path data_dir, StoreOptions options, int lock_fd, sqlite3* db);
  void migrate();
  Bytes thumbnail_for(std::string_view html, const ConstraintSet& cs, Viewport viewport);
  StoredAsset insert_asset_locked(const std::string& owner, const Bytes& bytes, AssetKind kind,
                                  const std::string& mime);

  std::filesystem::path data_dir_;
  StoreOptions options_;
  int lock_fd_;
  sqlite3* db_;
  std::mutex mu_;
};

}  // namespace uiforge
