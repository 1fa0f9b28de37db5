#include "tailwind_config.h"

#include <cctype>
#include <memory>
#include <optional>
#include <variant>

namespace uiforge::detail {
namespace {

// Minimal JavaScript object-literal reader: objects, arrays, string and
// numeric literals; bare identifiers are kept as opaque strings.
struct JsValue;
using JsObject = std::vector<std::pair<std::string, JsValue>>;
using JsArray = std::vector<JsValue>;

struct JsValue {
  std::variant<std::string, std::shared_ptr<JsObject>, std::shared_ptr<JsArray>> v;
  const std::string* str() const { return std::get_if<std::string>(&v); }
  const JsObject* obj() const {
    auto p = std::get_if<std::shared_ptr<JsObject>>(&v);
    return p ? p->get() : nullptr;
  }
  const JsArray* arr() const {
    auto p = std::get_if<std::shared_ptr<JsArray>>(&v);
    return p ? p->get() : nullptr;
  }
};

class Reader {
 public:
  Reader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}

  std::optional<JsValue> value(int depth = 0) {
    if (depth > 32) return std::nullopt;
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    char c = s_[pos_];
    if (c == '{') return object(depth);
    if (c == '[') return array(depth);
    if (c == '"' || c == '\'' || c == '`') {
      auto s = string_literal();
      if (!s) return std::nullopt;
      return JsValue{*s};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != '}' && s_[pos_] != ']') ++pos_;
    std::string_view raw = s_.substr(start, pos_ - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    return JsValue{std::string(raw)};
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "//") == 0) {
        auto nl = s_.find('\n', pos_);
        pos_ = nl == std::string_view::npos ? s_.size() : nl + 1;
      } else if (s_.compare(pos_, 2, "/*") == 0) {
        auto end = s_.find("*/", pos_ + 2);
        pos_ = end == std::string_view::npos ? s_.size() : end + 2;
      } else {
        break;
      }
    }
  }

  std::optional<std::string> string_literal() {
    char quote = s_[pos_++];
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != quote) {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
      out.push_back(s_[pos_++]);
    }
    if (pos_ >= s_.size()) return std::nullopt;
    ++pos_;
    return out;
  }

  std::optional<std::string> key() {
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    if (s_[pos_] == '"' || s_[pos_] == '\'') return string_literal();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '$' || s_[pos_] == '-')) {
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::optional<JsValue> object(int depth) {
    ++pos_;  // '{'
    auto out = std::make_shared<JsObject>();
    while (true) {
      skip();
      if (pos_ >= s_.size()) return std::nullopt;
      if (s_[pos_] == '}') {
        ++pos_;
        return JsValue{out};
      }
      if (s_.compare(pos_, 3, "...") == 0) {
        pos_ += 3;
        if (!value(depth + 1)) return std::nullopt;
      } else {
        auto k = key();
        if (!k) return std::nullopt;
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ':') return std::nullopt;
        ++pos_;
        auto v = value(depth + 1);
        if (!v) return std::nullopt;
        out->emplace_back(std::move(*k), std::move(*v));
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
    }
  }

  std::optional<JsValue> array(int depth) {
    ++pos_;  // '['
    auto out = std::make_shared<JsArray>();
    while (true) {
      skip();
      if (pos_ >= s_.size()) return std::nullopt;
      if (s_[pos_] == ']') {
        ++pos_;
        return JsValue{out};
      }
      auto v = value(depth + 1);
      if (!v) return std::nullopt;
      out->push_back(std::move(*v));
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_;
};

// Positions of `name:` / "name": keys.
std::vector<std::size_t> key_positions(std::string_view script, std::string_view name) {
  std::vector<std::size_t> out;
  for (std::size_t i = script.find(name); i != std::string_view::npos; i = script.find(name, i + 1)) {
    std::size_t after = i + name.size();
    if (after < script.size() && (script[after] == '"' || script[after] == '\'')) ++after;
    while (after < script.size() && std::isspace(static_cast<unsigned char>(script[after]))) ++after;
    if (after < script.size() && script[after] == ':') {
      ++after;
      while (after < script.size() && std::isspace(static_cast<unsigned char>(script[after]))) ++after;
      if (after < script.size() && script[after] == '{') out.push_back(after);
    }
  }
  return out;
}

void flatten_colors(const JsObject& obj, const std::string& prefix, std::map<std::string, Rgb>& out) {
  for (const auto& [k, v] : obj) {
    std::string name = prefix.empty() ? k : (k == "DEFAULT" ? prefix : prefix + "-" + k);
    if (const auto* s = v.str()) {
      if (auto c = parse_css_color(*s)) out[name] = *c;
    } else if (const auto* o = v.obj()) {
      flatten_colors(*o, name, out);
    }
  }
}

}  // namespace

TailwindConfig parse_tailwind_config(std::string_view script) {
  TailwindConfig config;
  for (std::size_t pos : key_positions(script, "colors")) {
    if (auto v = Reader(script, pos).value(); v && v->obj()) flatten_colors(*v->obj(), "", config.colors);
  }
  for (std::size_t pos : key_positions(script, "fontFamily")) {
    auto v = Reader(script, pos).value();
    if (!v || !v->obj()) continue;
    for (const auto& [k, family] : *v->obj()) {
      std::vector<std::string> names;
      // Names are often quoted twice: ['"Orelega One"', 'serif'].
      auto add = [&names](std::string name) {
        if (name.size() >= 2 && (name.front() == '"' || name.front() == '\'') && name.back() == name.front()) {
          name = name.substr(1, name.size() - 2);
        }
        names.push_back(std::move(name));
      };
      if (const auto* s = family.str()) {
        add(*s);
      } else if (const auto* a = family.arr()) {
        for (const auto& item : *a) {
          if (const auto* s = item.str()) add(*s);
        }
      }
      config.font_families[k] = std::move(names);
    }
  }
  return config;
}

}  // namespace uiforge::detail
