#include "uiforge/store.h"

#include <fcntl.h>
#include <sodium.h>
#include <sqlite3.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iterator>

#include "codec.h"
#include "uiforge/crypto.h"
#include "uiforge/error.h"

namespace uiforge {
namespace {

namespace fs = std::filesystem;
using detail::json;

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS users (
  id TEXT PRIMARY KEY,
  login TEXT NOT NULL UNIQUE,
  password_hash TEXT NOT NULL,
  created_at TEXT NOT NULL);
CREATE TABLE IF NOT EXISTS sessions (
  token_hash TEXT PRIMARY KEY,
  user_id TEXT NOT NULL REFERENCES users(id),
  expires_ms INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS slots (
  slot_id TEXT PRIMARY KEY,
  owner TEXT NOT NULL,
  current_index INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS versions (
  slot_id TEXT NOT NULL REFERENCES slots(slot_id),
  idx INTEGER NOT NULL,
  design_id TEXT NOT NULL,
  body TEXT NOT NULL,
  PRIMARY KEY (slot_id, idx));
CREATE TABLE IF NOT EXISTS canvases (
  id TEXT PRIMARY KEY,
  owner TEXT NOT NULL,
  name TEXT NOT NULL,
  body TEXT NOT NULL,
  saved_ms INTEGER NOT NULL,
  seq INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS folders (
  id TEXT PRIMARY KEY,
  owner TEXT NOT NULL,
  name TEXT NOT NULL,
  created_ms INTEGER NOT NULL,
  UNIQUE (owner, name));
CREATE TABLE IF NOT EXISTS favorites (
  id TEXT PRIMARY KEY,
  folder_id TEXT NOT NULL REFERENCES folders(id),
  body TEXT NOT NULL,
  thumbnail_asset_id TEXT NOT NULL,
  seq INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS assets (
  id TEXT PRIMARY KEY,
  owner TEXT NOT NULL,
  kind TEXT NOT NULL,
  mime TEXT NOT NULL,
  size_bytes INTEGER NOT NULL,
  created_at TEXT NOT NULL);
CREATE TABLE IF NOT EXISTS meta (key TEXT PRIMARY KEY, value TEXT NOT NULL);
INSERT OR IGNORE INTO meta VALUES ('schema_version', '1');
)sql";

class Stmt {
 public:
  Stmt(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) fail("prepare");
  }
  ~Stmt() { sqlite3_finalize(stmt_); }
  Stmt(const Stmt&) = delete;
  Stmt& operator=(const Stmt&) = delete;

  Stmt& bind(int i, std::string_view v) {
    sqlite3_bind_text(stmt_, i, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
    return *this;
  }
  Stmt& bind(int i, std::int64_t v) {
    sqlite3_bind_int64(stmt_, i, v);
    return *this;
  }
  // True while a row is available.
  bool step() {
    int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    if (rc == SQLITE_CONSTRAINT) {
      throw Error(ErrorCode::kConflict, std::string("constraint violated: ") + sqlite3_errmsg(db_));
    }
    fail("step");
  }
  void run() {
    while (step()) {
    }
  }
  std::string text(int col) const {
    auto p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char*>(p), sqlite3_column_bytes(stmt_, col)) : "";
  }
  std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }

 private:
  [[noreturn]] void fail(const char* what) {
    throw Error(ErrorCode::kIoError, std::string("database ") + what + " failed: " + sqlite3_errmsg(db_));
  }
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

void exec(sqlite3* db, const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown";
    sqlite3_free(err);
    throw Error(ErrorCode::kIoError, "database exec failed: " + msg);
  }
}

class Transaction {
 public:
  explicit Transaction(sqlite3* db) : db_(db) { exec(db_, "BEGIN IMMEDIATE"); }
  ~Transaction() {
    if (!done_) sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
  }
  void commit() {
    exec(db_, "COMMIT");
    done_ = true;
  }

 private:
  sqlite3* db_;
  bool done_ = false;
};

std::int64_t epoch_ms(TimePoint tp) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(tp.time_since_epoch()).count();
}

std::string ext_for(std::string_view mime) { return mime == "image/jpeg" ? ".jpg" : ".png"; }

void write_file_atomic(const fs::path& path, const Bytes& bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Owner of a row, or nullopt when the row does not exist.
std::optional<std::string> owner_of(sqlite3* db, const char* sql, const std::string& id) {
  Stmt s(db, sql);
  s.bind(1, id);
  if (!s.step()) return std::nullopt;
  return s.text(0);
}

void check_owner(const std::optional<std::string>& actual, const std::string& owner, const char* what,
                 const std::string& id) {
  if (!actual) throw Error(ErrorCode::kNotFound, std::string(what) + " " + id + " not found");
  if (*actual != owner) {
    throw Error(ErrorCode::kForbidden, std::string(what) + " " + id + " belongs to another user");
  }
}

}  // namespace

std::string_view to_string(AssetKind kind) {
  switch (kind) {
    case AssetKind::kLogo:
      return "logo";
    case AssetKind::kThumbnail:
      return "thumbnail";
    case AssetKind::kReferenceImage:
      return "reference-image";
  }
  return "";
}

std::optional<AssetKind> parse_asset_kind(std::string_view name) {
  if (name == "logo") return AssetKind::kLogo;
  if (name == "thumbnail") return AssetKind::kThumbnail;
  if (name == "reference-image") return AssetKind::kReferenceImage;
  return std::nullopt;
}

std::unique_ptr<WorkspaceStore> WorkspaceStore::open(const fs::path& data_dir, StoreOptions options) {
  if (sodium_init() < 0) throw Error(ErrorCode::kInternal, "libsodium failed to initialize");
  std::error_code ec;
  fs::create_directories(data_dir / "assets", ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create data dir " + data_dir.string() + ": " + ec.message());

  fs::path lock_path = data_dir / "LOCK";
  int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0600);
  if (fd < 0) throw Error(ErrorCode::kIoError, "cannot open " + lock_path.string());
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd);
    throw Error(ErrorCode::kConflict, "data dir " + data_dir.string() + " is in use by another process");
  }

  sqlite3* db = nullptr;
  fs::path db_path = data_dir / "workspace.db";
  if (sqlite3_open_v2(db_path.c_str(), &db, SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db ? sqlite3_errmsg(db) : "out of memory";
    sqlite3_close(db);
    ::close(fd);
    throw Error(ErrorCode::kIoError, "cannot open database: " + msg);
  }
  if (options.pwhash_opslimit == 0) options.pwhash_opslimit = crypto_pwhash_OPSLIMIT_INTERACTIVE;
  if (options.pwhash_memlimit == 0) options.pwhash_memlimit = crypto_pwhash_MEMLIMIT_INTERACTIVE;
  if (!options.clock) options.clock = system_clock();
  std::unique_ptr<WorkspaceStore> store(new WorkspaceStore(data_dir, std::move(options), fd, db));
  store->migrate();
  return store;
}

WorkspaceStore::WorkspaceStore(fs::path data_dir, StoreOptions options, int lock_fd, sqlite3* db)
    : data_dir_(std::move(data_dir)), options_(std::move(options)), lock_fd_(lock_fd), db_(db) {}

WorkspaceStore::~WorkspaceStore() {
  sqlite3_close(db_);
  ::flock(lock_fd_, LOCK_UN);
  ::close(lock_fd_);
}

void WorkspaceStore::migrate() {
  exec(db_, "PRAGMA journal_mode=WAL");
  exec(db_, "PRAGMA synchronous=FULL");
  exec(db_, "PRAGMA foreign_keys=ON");
  exec(db_, kSchema);
}

UserAccount WorkspaceStore::add_user(const std::string& login, const std::string& password) {
  if (login.empty() || password.empty()) {
    throw Error(ErrorCode::kValidationFailed, "login and password must be non-empty");
  }
  char hash[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str(hash, password.data(), password.size(), options_.pwhash_opslimit,
                        options_.pwhash_memlimit) != 0) {
    throw Error(ErrorCode::kInternal, "password hashing ran out of memory");
  }
  std::lock_guard lock(mu_);
  UserAccount user{uuid_v4(), login, format_timestamp(options_.clock())};
  Stmt s(db_, "INSERT INTO users (id, login, password_hash, created_at) VALUES (?, ?, ?, ?)");
  s.bind(1, user.id).bind(2, user.login).bind(3, std::string_view(hash)).bind(4, user.created_at);
  try {
    s.run();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConflict) throw Error(ErrorCode::kConflict, "login '" + login + "' is taken");
    throw;
  }
  return user;
}

SessionToken WorkspaceStore::login(const std::string& login, const std::string& password) {
  std::string user_id, hash;
  {
    std::lock_guard lock(mu_);
    Stmt s(db_, "SELECT id, password_hash FROM users WHERE login = ?");
    s.bind(1, login);
    if (s.step()) {
      user_id = s.text(0);
      hash = s.text(1);
    }
  }
  bool ok = !hash.empty() &&
            crypto_pwhash_str_verify(hash.c_str(), password.data(), password.size()) == 0;
  if (!ok) throw Error(ErrorCode::kUnauthorized, "invalid login or password");

  auto now = options_.clock();
  SessionToken session;
  session.token = random_hex(32);
  session.user_id = user_id;
  auto expires = now + options_.session_lifetime;
  session.expires_at = format_timestamp(expires);
  std::lock_guard lock(mu_);
  Stmt del(db_, "DELETE FROM sessions WHERE expires_ms <= ?");
  del.bind(1, epoch_ms(now)).run();
  Stmt s(db_, "INSERT INTO sessions (token_hash, user_id, expires_ms) VALUES (?, ?, ?)");
  s.bind(1, sha256_hex(session.token)).bind(2, user_id).bind(3, epoch_ms(expires)).run();
  return session;
}

void WorkspaceStore::logout(const std::string& token) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "DELETE FROM sessions WHERE token_hash = ?");
  s.bind(1, sha256_hex(token)).run();
}

UserAccount WorkspaceStore::authenticate(const std::string& token) {
  std::lock_guard lock(mu_);
  Stmt s(db_,
         "SELECT u.id, u.login, u.created_at, s.expires_ms FROM sessions s JOIN users u ON u.id = s.user_id "
         "WHERE s.token_hash = ?");
  s.bind(1, sha256_hex(token));
  if (!s.step() || s.integer(3) <= epoch_ms(options_.clock())) {
    throw Error(ErrorCode::kUnauthorized, "session is missing or expired");
  }
  return {s.text(0), s.text(1), s.text(2)};
}

void WorkspaceStore::save_chain(const std::string& owner, const VersionChain& chain) {
  if (chain.versions.empty() || chain.current_index >= chain.versions.size()) {
    throw Error(ErrorCode::kValidationFailed, "version chain is empty or its current index is out of range");
  }
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  auto existing_owner = owner_of(db_, "SELECT owner FROM slots WHERE slot_id = ?", chain.slot_id);
  if (existing_owner && *existing_owner != owner) {
    throw Error(ErrorCode::kForbidden, "slot " + chain.slot_id + " belongs to another user");
  }
  std::vector<std::string> stored;
  {
    Stmt s(db_, "SELECT design_id FROM versions WHERE slot_id = ? ORDER BY idx");
    s.bind(1, chain.slot_id);
    while (s.step()) stored.push_back(s.text(0));
  }
  if (stored.size() > chain.versions.size()) {
    throw Error(ErrorCode::kConflict, "slot " + chain.slot_id + " has versions this chain lacks");
  }
  for (std::size_t i = 0; i < stored.size(); ++i) {
    if (stored[i] != chain.versions[i].id) {
      throw Error(ErrorCode::kConflict, "stored version " + std::to_string(i) + " of slot " + chain.slot_id +
                                            " cannot be replaced");
    }
  }
  if (existing_owner) {
    Stmt s(db_, "UPDATE slots SET current_index = ? WHERE slot_id = ?");
    s.bind(1, static_cast<std::int64_t>(chain.current_index)).bind(2, chain.slot_id).run();
  } else {
    Stmt s(db_, "INSERT INTO slots (slot_id, owner, current_index) VALUES (?, ?, ?)");
    s.bind(1, chain.slot_id).bind(2, owner).bind(3, static_cast<std::int64_t>(chain.current_index)).run();
  }
  for (std::size_t i = stored.size(); i < chain.versions.size(); ++i) {
    Stmt s(db_, "INSERT INTO versions (slot_id, idx, design_id, body) VALUES (?, ?, ?, ?)");
    s.bind(1, chain.slot_id)
        .bind(2, static_cast<std::int64_t>(i))
        .bind(3, chain.versions[i].id)
        .bind(4, detail::to_json(chain.versions[i]).dump())
        .run();
  }
  tx.commit();
}

VersionChain WorkspaceStore::load_chain(const std::string& owner, const std::string& slot_id) {
  std::lock_guard lock(mu_);
  check_owner(owner_of(db_, "SELECT owner FROM slots WHERE slot_id = ?", slot_id), owner, "slot", slot_id);
  VersionChain chain;
  chain.slot_id = slot_id;
  {
    Stmt s(db_, "SELECT current_index FROM slots WHERE slot_id = ?");
    s.bind(1, slot_id);
    s.step();
    chain.current_index = static_cast<std::size_t>(s.integer(0));
  }
  Stmt s(db_, "SELECT body FROM versions WHERE slot_id = ? ORDER BY idx");
  s.bind(1, slot_id);
  while (s.step()) chain.versions.push_back(detail::design_from_json(json::parse(s.text(0))));
  return chain;
}

std::vector<std::string> WorkspaceStore::list_slots(const std::string& owner) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT slot_id FROM slots WHERE owner = ? ORDER BY rowid");
  s.bind(1, owner);
  std::vector<std::string> out;
  while (s.step()) out.push_back(s.text(0));
  return out;
}

Bytes WorkspaceStore::thumbnail_for(std::string_view html, const ConstraintSet& cs, Viewport viewport) {
  if (options_.render_thumbnail) {
    if (auto png = options_.render_thumbnail(html, viewport)) return *png;
  }
  std::uint8_t r = 0xCC, g = 0xCC, b = 0xCC;
  if (!cs.colors.empty()) {
    if (auto hex = normalize_hex_color(cs.colors.front())) {
      unsigned v = static_cast<unsigned>(std::stoul(hex->substr(1), nullptr, 16));
      r = static_cast<std::uint8_t>(v >> 16);
      g = static_cast<std::uint8_t>(v >> 8);
      b = static_cast<std::uint8_t>(v);
    }
  }
  return encode_png(solid_image(160, 100, r, g, b));
}

StoredAsset WorkspaceStore::insert_asset_locked(const std::string& owner, const Bytes& bytes, AssetKind kind,
                                                const std::string& mime) {
  StoredAsset asset;
  asset.id = random_hex(16);
  asset.owner_user_id = owner;
  asset.kind = kind;
  asset.mime = mime;
  asset.size_bytes = bytes.size();
  asset.created_at = format_timestamp(options_.clock());
  write_file_atomic(data_dir_ / "assets" / (asset.id + ext_for(mime)), bytes);
  Stmt s(db_, "INSERT INTO assets (id, owner, kind, mime, size_bytes, created_at) VALUES (?, ?, ?, ?, ?, ?)");
  s.bind(1, asset.id)
      .bind(2, owner)
      .bind(3, to_string(kind))
      .bind(4, mime)
      .bind(5, static_cast<std::int64_t>(bytes.size()))
      .bind(6, asset.created_at)
      .run();
  return asset;
}

Canvas WorkspaceStore::save_canvas(const std::string& owner, Canvas canvas) {
  Bytes preview = thumbnail_for("", canvas.panel_state, viewport_for(canvas.panel_state.device));
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  std::optional<std::string> old_preview;
  bool exists = false;
  if (!canvas.id.empty()) {
    check_owner(owner_of(db_, "SELECT owner FROM canvases WHERE id = ?", canvas.id), owner, "canvas", canvas.id);
    exists = true;
    Stmt s(db_, "SELECT body FROM canvases WHERE id = ?");
    s.bind(1, canvas.id);
    if (s.step()) old_preview = detail::canvas_from_json(json::parse(s.text(0))).preview_asset_id;
  } else {
    canvas.id = uuid_v4();
  }
  canvas.owner_user_id = owner;
  auto now = options_.clock();
  canvas.saved_at = format_timestamp(now);
  canvas.preview_asset_id = insert_asset_locked(owner, preview, AssetKind::kThumbnail, "image/png").id;

  std::int64_t seq = 0;
  {
    Stmt s(db_, "SELECT COALESCE(MAX(seq), 0) + 1 FROM canvases");
    s.step();
    seq = s.integer(0);
  }
  const char* sql = exists ? "UPDATE canvases SET name = ?2, body = ?3, saved_ms = ?4, seq = ?5 WHERE id = ?1"
                           : "INSERT INTO canvases (id, name, body, saved_ms, seq, owner) VALUES (?1, ?2, ?3, ?4, ?5, ?6)";
  Stmt s(db_, sql);
  s.bind(1, canvas.id).bind(2, canvas.name).bind(3, detail::to_json(canvas).dump()).bind(4, epoch_ms(now)).bind(5, seq);
  if (!exists) s.bind(6, owner);
  s.run();
  if (old_preview) {
    Stmt d(db_, "DELETE FROM assets WHERE id = ?");
    d.bind(1, *old_preview).run();
  }
  tx.commit();
  if (old_preview) {
    std::error_code ec;
    fs::remove(data_dir_ / "assets" / (*old_preview + ".png"), ec);
  }
  return canvas;
}

Canvas WorkspaceStore::load_canvas(const std::string& owner, const std::string& canvas_id) {
  std::lock_guard lock(mu_);
  check_owner(owner_of(db_, "SELECT owner FROM canvases WHERE id = ?", canvas_id), owner, "canvas", canvas_id);
  Stmt s(db_, "SELECT body FROM canvases WHERE id = ?");
  s.bind(1, canvas_id);
  s.step();
  Canvas c = detail::canvas_from_json(json::parse(s.text(0)));
  c.owner_user_id = owner;
  return c;
}

std::vector<CanvasSummary> WorkspaceStore::list_canvases(const std::string& owner) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT body FROM canvases WHERE owner = ? ORDER BY saved_ms DESC, seq DESC");
  s.bind(1, owner);
  std::vector<CanvasSummary> out;
  while (s.step()) {
    Canvas c = detail::canvas_from_json(json::parse(s.text(0)));
    out.push_back({c.id, c.name, c.saved_at, c.slots.size(), c.preview_asset_id});
  }
  return out;
}

void WorkspaceStore::delete_canvas(const std::string& owner, const std::string& canvas_id) {
  Canvas c = load_canvas(owner, canvas_id);
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  Stmt s(db_, "DELETE FROM canvases WHERE id = ?");
  s.bind(1, canvas_id).run();
  if (c.preview_asset_id) {
    Stmt d(db_, "DELETE FROM assets WHERE id = ?");
    d.bind(1, *c.preview_asset_id).run();
  }
  tx.commit();
  if (c.preview_asset_id) {
    std::error_code ec;
    fs::remove(data_dir_ / "assets" / (*c.preview_asset_id + ".png"), ec);
  }
}

FavoritesFolder WorkspaceStore::create_folder(const std::string& owner, const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::kValidationFailed, "folder name must be non-empty");
  std::lock_guard lock(mu_);
  FavoritesFolder f{uuid_v4(), owner, name, {}};
  Stmt s(db_, "INSERT INTO folders (id, owner, name, created_ms) VALUES (?, ?, ?, ?)");
  s.bind(1, f.id).bind(2, owner).bind(3, name).bind(4, epoch_ms(options_.clock()));
  try {
    s.run();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConflict) throw Error(ErrorCode::kConflict, "folder '" + name + "' already exists");
    throw;
  }
  return f;
}

std::vector<FolderSummary> WorkspaceStore::list_folders(const std::string& owner) {
  std::lock_guard lock(mu_);
  Stmt s(db_,
         "SELECT f.id, f.name, COUNT(e.id), "
         "(SELECT thumbnail_asset_id FROM favorites WHERE folder_id = f.id ORDER BY seq DESC LIMIT 1) "
         "FROM folders f LEFT JOIN favorites e ON e.folder_id = f.id "
         "WHERE f.owner = ? GROUP BY f.id ORDER BY f.name");
  s.bind(1, owner);
  std::vector<FolderSummary> out;
  while (s.step()) {
    FolderSummary f{s.text(0), s.text(1), static_cast<std::size_t>(s.integer(2)), std::nullopt};
    if (std::string t = s.text(3); !t.empty()) f.preview_asset_id = t;
    out.push_back(std::move(f));
  }
  return out;
}

FavoritesFolder WorkspaceStore::load_folder(const std::string& owner, const std::string& folder_id) {
  std::lock_guard lock(mu_);
  check_owner(owner_of(db_, "SELECT owner FROM folders WHERE id = ?", folder_id), owner, "folder", folder_id);
  FavoritesFolder f;
  f.id = folder_id;
  f.owner_user_id = owner;
  {
    Stmt s(db_, "SELECT name FROM folders WHERE id = ?");
    s.bind(1, folder_id);
    s.step();
    f.name = s.text(0);
  }
  Stmt s(db_, "SELECT body FROM favorites WHERE folder_id = ? ORDER BY seq");
  s.bind(1, folder_id);
  while (s.step()) f.entries.push_back(detail::favorite_from_json(json::parse(s.text(0))));
  return f;
}

void WorkspaceStore::delete_folder(const std::string& owner, const std::string& folder_id) {
  FavoritesFolder f = load_folder(owner, folder_id);
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  for (const auto& e : f.entries) {
    Stmt d(db_, "DELETE FROM assets WHERE id = ?");
    d.bind(1, e.thumbnail_asset_id).run();
  }
  Stmt e(db_, "DELETE FROM favorites WHERE folder_id = ?");
  e.bind(1, folder_id).run();
  Stmt s(db_, "DELETE FROM folders WHERE id = ?");
  s.bind(1, folder_id).run();
  tx.commit();
  for (const auto& entry : f.entries) {
    std::error_code ec;
    fs::remove(data_dir_ / "assets" / (entry.thumbnail_asset_id + ".png"), ec);
  }
}

FavoriteEntry WorkspaceStore::save_to_favorites(const std::string& owner, const std::string& folder_id,
                                                const GeneratedDesign& design) {
  Bytes thumb = thumbnail_for(design.html_document, design.constraints_snapshot, design.device_viewport);
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  check_owner(owner_of(db_, "SELECT owner FROM folders WHERE id = ?", folder_id), owner, "folder", folder_id);
  FavoriteEntry entry;
  entry.id = uuid_v4();
  entry.html_document = design.html_document;
  entry.constraints_snapshot = design.constraints_snapshot;
  entry.saved_at = format_timestamp(options_.clock());
  entry.source_design_id = design.id;
  entry.thumbnail_asset_id = insert_asset_locked(owner, thumb, AssetKind::kThumbnail, "image/png").id;
  std::int64_t seq = 0;
  {
    Stmt s(db_, "SELECT COALESCE(MAX(seq), 0) + 1 FROM favorites");
    s.step();
    seq = s.integer(0);
  }
  Stmt s(db_, "INSERT INTO favorites (id, folder_id, body, thumbnail_asset_id, seq) VALUES (?, ?, ?, ?, ?)");
  s.bind(1, entry.id)
      .bind(2, folder_id)
      .bind(3, detail::to_json(entry).dump())
      .bind(4, entry.thumbnail_asset_id)
      .bind(5, seq)
      .run();
  tx.commit();
  return entry;
}

void WorkspaceStore::delete_favorite(const std::string& owner, const std::string& folder_id,
                                     const std::string& entry_id) {
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  check_owner(owner_of(db_, "SELECT owner FROM folders WHERE id = ?", folder_id), owner, "folder", folder_id);
  std::string thumb;
  {
    Stmt s(db_, "SELECT thumbnail_asset_id FROM favorites WHERE id = ? AND folder_id = ?");
    s.bind(1, entry_id).bind(2, folder_id);
    if (!s.step()) throw Error(ErrorCode::kNotFound, "favorite " + entry_id + " not found");
    thumb = s.text(0);
  }
  Stmt s(db_, "DELETE FROM favorites WHERE id = ?");
  s.bind(1, entry_id).run();
  Stmt d(db_, "DELETE FROM assets WHERE id = ?");
  d.bind(1, thumb).run();
  tx.commit();
  std::error_code ec;
  fs::remove(data_dir_ / "assets" / (thumb + ".png"), ec);
}

StoredAsset WorkspaceStore::store_asset(const std::string& owner, const Bytes& bytes, AssetKind kind) {
  if (bytes.size() > options_.max_asset_bytes) {
    throw Error(ErrorCode::kPayloadTooLarge, "asset exceeds " + std::to_string(options_.max_asset_bytes) + " bytes");
  }
  auto mime = sniff_image_mime(bytes);
  if (!mime) throw Error(ErrorCode::kValidationFailed, "asset must be a PNG or JPEG image");
  decode_image(bytes);  // rejects truncated or corrupt files
  std::lock_guard lock(mu_);
  return insert_asset_locked(owner, bytes, kind, *mime);
}

StoredAsset WorkspaceStore::asset_info(const std::string& asset_id) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT id, owner, kind, mime, size_bytes, created_at FROM assets WHERE id = ?");
  s.bind(1, asset_id);
  if (!s.step()) throw Error(ErrorCode::kNotFound, "asset " + asset_id + " not found");
  StoredAsset a;
  a.id = s.text(0);
  a.owner_user_id = s.text(1);
  a.kind = parse_asset_kind(s.text(2)).value_or(AssetKind::kLogo);
  a.mime = s.text(3);
  a.size_bytes = static_cast<std::size_t>(s.integer(4));
  a.created_at = s.text(5);
  return a;
}

std::optional<std::pair<StoredAsset, Bytes>> WorkspaceStore::read_asset(const std::string& asset_id) {
  StoredAsset a;
  try {
    a = asset_info(asset_id);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotFound) return std::nullopt;
    throw;
  }
  std::ifstream in(data_dir_ / "assets" / (a.id + ext_for(a.mime)), std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "asset file for " + a.id + " is missing");
  Bytes bytes(std::istreambuf_iterator<char>(in), {});
  return std::make_pair(std::move(a), std::move(bytes));
}

std::vector<StoredAsset> WorkspaceStore::list_assets(const std::string& owner) {
  std::vector<std::string> ids;
  {
    std::lock_guard lock(mu_);
    Stmt s(db_, "SELECT id FROM assets WHERE owner = ? ORDER BY created_at, rowid");
    s.bind(1, owner);
    while (s.step()) ids.push_back(s.text(0));
  }
  std::vector<StoredAsset> out;
  for (const auto& id : ids) out.push_back(asset_info(id));
  return out;
}

void WorkspaceStore::delete_asset(const std::string& owner, const std::string& asset_id) {
  StoredAsset a = asset_info(asset_id);
  check_owner(a.owner_user_id, owner, "asset", asset_id);
  {
    std::lock_guard lock(mu_);
    Stmt s(db_, "DELETE FROM assets WHERE id = ?");
    s.bind(1, asset_id).run();
  }
  std::error_code ec;
  fs::remove(data_dir_ / "assets" / (a.id + ext_for(a.mime)), ec);
}

}  // namespace uiforge
