#pragma once

#include <nlohmann/json.hpp>

#include "uiforge/adherence.h"
#include "uiforge/engine.h"
#include "uiforge/error.h"
#include "uiforge/prompt.h"
#include "uiforge/store.h"

// JSON shapes shared by the store's persisted records and the HTTP API.
namespace uiforge::detail {

using json = nlohmann::json;

json to_json(const ModificationRequest& m);
ModificationRequest modification_from_json(const json& j);

json to_json(const GeneratedDesign& d);
GeneratedDesign design_from_json(const json& j);

// Chain metadata plus every version.
json to_json(const VersionChain& chain);

json to_json(const AdherenceReport& r);
json to_json(const CanvasSlot& s);
CanvasSlot slot_from_json(const json& j);
json to_json(const Canvas& c);
Canvas canvas_from_json(const json& j);
json to_json(const CanvasSummary& s);
json to_json(const FavoriteEntry& e);
FavoriteEntry favorite_from_json(const json& j);
json to_json(const FavoritesFolder& f);
json to_json(const FolderSummary& s);
json to_json(const StoredAsset& a);
json to_json(const ValidationIssue& issue);

// Typed field access raising Error(kParseError) naming the field.
std::string require_string(const json& j, const char* key);
std::string optional_string(const json& j, const char* key, std::string fallback = {});

}  // namespace uiforge::detail
