#include "uiforge/settings.h"

#include "settings_json.h"

namespace uiforge {
namespace detail {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void type_error(std::string_view key, std::string_view expected) {
  throw Error(ErrorCode::kParseError,
              "settings field '" + std::string(key) + "' must be " + std::string(expected));
}

std::string string_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return {};
  if (!it->is_string()) type_error(key, "a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) type_error(key, "a string or null");
  return it->get<std::string>();
}

std::vector<std::string> string_array_field(const json& doc, const char* key) {
  std::vector<std::string> out;
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return out;
  if (!it->is_array()) type_error(key, "an array of strings");
  for (const auto& item : *it) {
    if (!item.is_string()) type_error(key, "an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

ordered_json optional_json(const std::optional<std::string>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

ordered_json settings_to_json(const ConstraintSet& cs) {
  ordered_json doc;
  doc["schema_version"] = kSettingsSchemaVersion;
  doc["industry"] = cs.industry;
  doc["product_purpose"] = cs.product_purpose;
  doc["target_audience"] = cs.target_audience;
  doc["device"] = std::string(to_string(cs.device));
  doc["screen_type"] = cs.screen_type;
  doc["colors"] = ordered_json::array();
  for (const auto& color : cs.colors) {
    doc["colors"].push_back(normalize_hex_color(color).value_or(color));
  }
  doc["fonts"] = cs.fonts;
  doc["style"] = cs.style ? ordered_json(std::string(to_string(*cs.style))) : ordered_json(nullptr);
  doc["design_theme"] = cs.design_theme
                            ? ordered_json(std::string(to_string(*cs.design_theme)))
                            : ordered_json(nullptr);
  doc["logo"] = optional_json(cs.logo);
  doc["features_text"] = cs.features_text;
  doc["locks"] = ordered_json::array();
  for (Field field : kAllFields) {
    if (cs.locks.count(field)) doc["locks"].push_back(std::string(to_string(field)));
  }
  return doc;
}

ConstraintSet settings_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "settings document must be a JSON object");
  }
  auto version = doc.find("schema_version");
  if (version == doc.end() || !version->is_number_integer()) {
    throw Error(ErrorCode::kParseError, "settings field 'schema_version' must be an integer");
  }
  if (version->get<long long>() != kSettingsSchemaVersion) {
    throw Error(ErrorCode::kParseError,
                "unsupported schema_version " + std::to_string(version->get<long long>()));
  }

  ConstraintSet cs;
  std::vector<ValidationIssue> issues;

  cs.industry = string_field(doc, "industry");
  cs.product_purpose = string_field(doc, "product_purpose");
  cs.target_audience = string_field(doc, "target_audience");
  cs.screen_type = string_field(doc, "screen_type");
  cs.features_text = string_field(doc, "features_text");

  auto device_it = doc.find("device");
  if (device_it == doc.end() || !device_it->is_string()) type_error("device", "a string");
  if (auto device = parse_device(device_it->get<std::string>())) {
    cs.device = *device;
  } else {
    issues.push_back({"device", IssueCode::kUnknownEnumValue,
                      "unknown device '" + device_it->get<std::string>() + "'"});
  }

  cs.colors = string_array_field(doc, "colors");
  for (auto& color : cs.colors) {
    if (auto norm = normalize_hex_color(color)) color = *norm;
  }
  cs.fonts = string_array_field(doc, "fonts");

  if (auto style = optional_string_field(doc, "style")) {
    if (auto parsed = parse_style(*style)) {
      cs.style = *parsed;
    } else {
      issues.push_back({"style", IssueCode::kUnknownEnumValue, "unknown style '" + *style + "'"});
    }
  }
  if (auto theme = optional_string_field(doc, "design_theme")) {
    if (auto parsed = parse_design_theme(*theme)) {
      cs.design_theme = *parsed;
    } else {
      issues.push_back(
          {"design_theme", IssueCode::kUnknownEnumValue, "unknown design theme '" + *theme + "'"});
    }
  }
  cs.logo = optional_string_field(doc, "logo");

  for (const auto& name : string_array_field(doc, "locks")) {
    if (auto field = parse_field(name)) {
      cs.locks.insert(*field);
    } else {
      issues.push_back({"locks", IssueCode::kUnknownLockTarget, "no field named '" + name + "'"});
    }
  }

  auto more = validate(cs);
  issues.insert(issues.end(), more.begin(), more.end());
  if (!issues.empty()) {
    throw Error(ErrorCode::kValidationFailed, "settings document violates constraints",
                std::move(issues));
  }
  return cs;
}

}  // namespace detail

std::string export_settings(const ConstraintSet& cs) {
  require_valid(cs);
  return detail::settings_to_json(cs).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

ConstraintSet import_settings(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed settings document: ") + e.what())
        .with_offset(e.byte);
  }
  return detail::settings_from_json(doc);
}

}  // namespace uiforge
