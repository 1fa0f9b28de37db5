#include "codec.h"

#include "settings_json.h"

namespace uiforge::detail {
namespace {

[[noreturn]] void bad_field(const char* key, const char* want) {
  throw Error(ErrorCode::kParseError, std::string("field '") + key + "' must be " + want);
}

double number(const json& j, const char* key, double fallback = 0) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number()) bad_field(key, "a number");
  return it->get<double>();
}

std::optional<std::string> nullable_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) bad_field(key, "a string");
  return it->get<std::string>();
}

json nullable(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, std::string(what) + " must be a JSON object");
}

}  // namespace

std::string require_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) bad_field(key, "a string");
  return it->get<std::string>();
}

std::string optional_string(const json& j, const char* key, std::string fallback) {
  auto s = nullable_string(j, key);
  return s ? *s : fallback;
}

json to_json(const ModificationRequest& m) {
  json ops = json::array();
  for (PresetOp op : m.preset_ops) ops.push_back(std::string(to_string(op)));
  return {{"target_selector", m.target_selector}, {"preset_ops", ops}, {"free_text", m.free_text}};
}

ModificationRequest modification_from_json(const json& j) {
  require_object(j, "modification request");
  ModificationRequest m;
  m.target_selector = optional_string(j, "target_selector");
  m.free_text = optional_string(j, "free_text");
  if (auto it = j.find("preset_ops"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) bad_field("preset_ops", "an array");
    for (const auto& op : *it) {
      if (!op.is_string()) bad_field("preset_ops", "an array of strings");
      auto parsed = parse_preset_op(op.get<std::string>());
      if (!parsed) {
        throw Error(ErrorCode::kValidationFailed, "unknown preset op",
                    {{"preset_ops", IssueCode::kUnknownEnumValue,
                      "unknown preset op '" + op.get<std::string>() + "'"}});
      }
      m.preset_ops.insert(*parsed);
    }
  }
  return m;
}

json to_json(const GeneratedDesign& d) {
  return {{"id", d.id},
          {"slot_id", d.slot_id},
          {"html_document", d.html_document},
          {"constraints", settings_to_json(d.constraints_snapshot)},
          {"reference_screen_id", nullable(d.reference_screen_id)},
          {"prompt_fingerprint", d.prompt_fingerprint},
          {"created_at", d.created_at},
          {"device_viewport", {{"width", d.device_viewport.width}, {"height", d.device_viewport.height}}},
          {"edit", d.edit ? to_json(*d.edit) : json(nullptr)},
          {"provider", d.provider_label},
          {"provider_ms", d.provider_ms},
          {"total_ms", d.total_ms}};
}

GeneratedDesign design_from_json(const json& j) {
  require_object(j, "design");
  GeneratedDesign d;
  d.id = require_string(j, "id");
  d.slot_id = require_string(j, "slot_id");
  d.html_document = require_string(j, "html_document");
  if (!j.contains("constraints")) bad_field("constraints", "a settings object");
  d.constraints_snapshot = settings_from_json(j["constraints"]);
  d.reference_screen_id = nullable_string(j, "reference_screen_id");
  d.prompt_fingerprint = optional_string(j, "prompt_fingerprint");
  d.created_at = optional_string(j, "created_at");
  if (auto it = j.find("device_viewport"); it != j.end() && it->is_object()) {
    d.device_viewport.width = static_cast<int>(number(*it, "width"));
    d.device_viewport.height = static_cast<int>(number(*it, "height"));
  }
  if (auto it = j.find("edit"); it != j.end() && !it->is_null()) d.edit = modification_from_json(*it);
  d.provider_label = optional_string(j, "provider");
  d.provider_ms = static_cast<std::int64_t>(number(j, "provider_ms"));
  d.total_ms = static_cast<std::int64_t>(number(j, "total_ms"));
  return d;
}

json to_json(const VersionChain& chain) {
  json versions = json::array();
  for (const auto& v : chain.versions) versions.push_back(to_json(v));
  return {{"slot_id", chain.slot_id},
          {"current_index", chain.current_index},
          {"version_count", chain.versions.size()},
          {"versions", versions}};
}

json to_json(const AdherenceReport& r) {
  json scores = json::object();
  for (const auto& [c, s] : r.scores) {
    auto p = s.percent();
    scores[std::string(to_string(c))] = {{"correct", s.correct},
                                         {"total", s.total},
                                         {"percent", p ? json(*p) : json(nullptr)},
                                         {"display", format_percent(s)},
                                         {"misses", s.misses}};
  }
  return {{"design_id", r.design_id}, {"evaluated_at", r.evaluated_at}, {"scores", scores}};
}

json to_json(const CanvasSlot& s) {
  return {{"slot_id", s.slot_id}, {"x", s.x},   {"y", s.y},
          {"width", s.width},     {"height", s.height}, {"z", s.z}};
}

CanvasSlot slot_from_json(const json& j) {
  require_object(j, "canvas slot");
  CanvasSlot s;
  s.slot_id = require_string(j, "slot_id");
  s.x = number(j, "x");
  s.y = number(j, "y");
  s.width = number(j, "width");
  s.height = number(j, "height");
  s.z = static_cast<int>(number(j, "z"));
  return s;
}

json to_json(const Canvas& c) {
  json slots = json::array();
  for (const auto& s : c.slots) slots.push_back(to_json(s));
  return {{"id", c.id},
          {"name", c.name},
          {"slots", slots},
          {"panel_state", settings_to_json(c.panel_state)},
          {"saved_at", c.saved_at},
          {"preview_asset_id", nullable(c.preview_asset_id)}};
}

Canvas canvas_from_json(const json& j) {
  require_object(j, "canvas");
  Canvas c;
  c.id = optional_string(j, "id");
  c.name = optional_string(j, "name");
  if (auto it = j.find("slots"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) bad_field("slots", "an array");
    for (const auto& s : *it) c.slots.push_back(slot_from_json(s));
  }
  if (auto it = j.find("panel_state"); it != j.end() && !it->is_null()) {
    c.panel_state = settings_from_json(*it);
  }
  c.saved_at = optional_string(j, "saved_at");
  c.preview_asset_id = nullable_string(j, "preview_asset_id");
  return c;
}

json to_json(const CanvasSummary& s) {
  return {{"id", s.id},
          {"name", s.name},
          {"saved_at", s.saved_at},
          {"slot_count", s.slot_count},
          {"preview_asset_id", nullable(s.preview_asset_id)}};
}

json to_json(const FavoriteEntry& e) {
  return {{"id", e.id},
          {"html_document", e.html_document},
          {"constraints", settings_to_json(e.constraints_snapshot)},
          {"thumbnail_asset_id", e.thumbnail_asset_id},
          {"saved_at", e.saved_at},
          {"source_design_id", e.source_design_id}};
}

FavoriteEntry favorite_from_json(const json& j) {
  require_object(j, "favorite");
  FavoriteEntry e;
  e.id = require_string(j, "id");
  e.html_document = require_string(j, "html_document");
  e.constraints_snapshot = settings_from_json(j.at("constraints"));
  e.thumbnail_asset_id = optional_string(j, "thumbnail_asset_id");
  e.saved_at = optional_string(j, "saved_at");
  e.source_design_id = optional_string(j, "source_design_id");
  return e;
}

json to_json(const FavoritesFolder& f) {
  json entries = json::array();
  for (const auto& e : f.entries) entries.push_back(to_json(e));
  return {{"id", f.id}, {"name", f.name}, {"entries", entries}};
}

json to_json(const FolderSummary& s) {
  return {{"id", s.id},
          {"name", s.name},
          {"entry_count", s.entry_count},
          {"preview_asset_id", nullable(s.preview_asset_id)}};
}

json to_json(const StoredAsset& a) {
  return {{"id", a.id},
          {"kind", std::string(to_string(a.kind))},
          {"mime", a.mime},
          {"size_bytes", a.size_bytes},
          {"created_at", a.created_at}};
}

json to_json(const ValidationIssue& issue) {
  return {{"field", issue.field}, {"code", std::string(to_string(issue.code))}, {"message", issue.message}};
}

}  // namespace uiforge::detail
