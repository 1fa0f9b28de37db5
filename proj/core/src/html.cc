#include "uiforge/html.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "uiforge/error.h"

namespace uiforge {
namespace {

constexpr std::array<std::string_view, 14> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};
constexpr std::array<std::string_view, 4> kRawTextElements = {"script", "style", "textarea",
                                                              "title"};

bool is_void(std::string_view tag) {
  return std::find(kVoidElements.begin(), kVoidElements.end(), tag) != kVoidElements.end();
}
bool is_raw_text(std::string_view tag) {
  return std::find(kRawTextElements.begin(), kRawTextElements.end(), tag) !=
         kRawTextElements.end();
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x110000) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Case-insensitive search for "</tag" starting at `from`.
std::size_t find_end_tag(std::string_view html, std::string_view tag, std::size_t from) {
  for (std::size_t i = html.find("</", from); i != std::string_view::npos;
       i = html.find("</", i + 2)) {
    if (i + 2 + tag.size() > html.size()) return std::string_view::npos;
    if (lower(html.substr(i + 2, tag.size())) == tag) {
      std::size_t after = i + 2 + tag.size();
      if (after == html.size() || is_space(html[after]) || html[after] == '>' ||
          html[after] == '/') {
        return i;
      }
    }
  }
  return std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view html) : html_(html) {}

  std::vector<HtmlElement> run() {
    while (pos_ < html_.size()) {
      std::size_t lt = html_.find('<', pos_);
      if (lt == std::string_view::npos) break;
      pos_ = lt;
      if (html_.compare(pos_, 4, "<!--") == 0) {
        std::size_t end = html_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else if (html_.compare(pos_, 2, "<!") == 0 || html_.compare(pos_, 2, "<?") == 0) {
        std::size_t end = html_.find('>', pos_);
        if (end == std::string_view::npos) fail("unterminated declaration");
        pos_ = end + 1;
      } else if (html_.compare(pos_, 2, "</") == 0) {
        end_tag();
      } else if (pos_ + 1 < html_.size() && is_alpha(html_[pos_ + 1])) {
        start_tag();
      } else {
        ++pos_;  // stray '<' in text
      }
    }
    if (elements_.empty()) fail("no elements found");
    return std::move(elements_);
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::kParseError, "HTML parse error at byte " + std::to_string(pos_) + ": " + why)
        .with_offset(pos_);
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < html_.size() && !is_space(html_[pos_]) && html_[pos_] != '>' &&
           html_[pos_] != '/' && html_[pos_] != '=') {
      ++pos_;
    }
    return lower(html_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < html_.size() && is_space(html_[pos_])) ++pos_;
  }

  void end_tag() {
    pos_ += 2;
    std::string tag = read_name();
    std::size_t gt = html_.find('>', pos_);
    if (gt == std::string_view::npos) fail("unterminated end tag");
    pos_ = gt + 1;
    auto it = std::find_if(open_.rbegin(), open_.rend(),
                           [&](int idx) { return elements_[idx].tag == tag; });
    if (it != open_.rend()) open_.erase(std::next(it).base(), open_.end());
  }

  void start_tag() {
    ++pos_;
    HtmlElement el;
    el.tag = read_name();
    bool self_closing = false;
    while (true) {
      skip_space();
      if (pos_ >= html_.size()) fail("unterminated start tag <" + el.tag + ">");
      char c = html_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        ++pos_;
        if (pos_ < html_.size() && html_[pos_] == '>') {
          self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      std::string name = read_name();
      if (name.empty()) {
        ++pos_;
        continue;
      }
      skip_space();
      std::string value;
      if (pos_ < html_.size() && html_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ >= html_.size()) fail("unterminated attribute");
        char quote = html_[pos_];
        if (quote == '"' || quote == '\'') {
          std::size_t end = html_.find(quote, pos_ + 1);
          if (end == std::string_view::npos) fail("unterminated attribute value");
          value = decode_entities(html_.substr(pos_ + 1, end - pos_ - 1));
          pos_ = end + 1;
        } else {
          std::size_t start = pos_;
          while (pos_ < html_.size() && !is_space(html_[pos_]) && html_[pos_] != '>') ++pos_;
          value = decode_entities(html_.substr(start, pos_ - start));
        }
      }
      el.attributes.emplace_back(std::move(name), std::move(value));
    }

    el.parent = open_.empty() ? -1 : open_.back();
    int index = static_cast<int>(elements_.size());
    if (el.parent >= 0) elements_[el.parent].children.push_back(index);
    const std::string tag = el.tag;
    elements_.push_back(std::move(el));

    if (self_closing || is_void(tag)) return;
    if (is_raw_text(tag)) {
      std::size_t end = find_end_tag(html_, tag, pos_);
      if (end == std::string_view::npos) end = html_.size();
      elements_[index].raw_text = std::string(html_.substr(pos_, end - pos_));
      pos_ = end;
      if (pos_ < html_.size()) {
        std::size_t gt = html_.find('>', pos_);
        pos_ = gt == std::string_view::npos ? html_.size() : gt + 1;
      }
      return;
    }
    open_.push_back(index);
  }

  std::string_view html_;
  std::size_t pos_ = 0;
  std::vector<HtmlElement> elements_;
  std::vector<int> open_;
};

}  // namespace

const std::string* HtmlElement::attr(std::string_view name) const {
  for (const auto& [k, v] : attributes) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::vector<std::string> HtmlElement::classes() const {
  std::vector<std::string> out;
  const std::string* cls = attr("class");
  if (!cls) return out;
  std::size_t i = 0;
  while (i < cls->size()) {
    while (i < cls->size() && is_space((*cls)[i])) ++i;
    std::size_t start = i;
    while (i < cls->size() && !is_space((*cls)[i])) ++i;
    if (i > start) out.push_back(cls->substr(start, i - start));
  }
  return out;
}

HtmlDocument HtmlDocument::parse(std::string_view html) {
  HtmlDocument doc;
  doc.elements_ = Parser(html).run();
  return doc;
}

std::vector<int> HtmlDocument::by_tag(std::string_view tag) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].tag == tag) out.push_back(static_cast<int>(i));
  }
  return out;
}

int HtmlDocument::first(std::string_view tag) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].tag == tag) return static_cast<int>(i);
  }
  return -1;
}

std::string HtmlDocument::selector_path(int index) const {
  std::vector<std::string> parts;
  for (int i = index; i >= 0; i = elements_[i].parent) {
    const auto& el = elements_[i];
    int ordinal = 1;
    if (el.parent >= 0) {
      for (int sibling : elements_[el.parent].children) {
        if (sibling == i) break;
        if (elements_[sibling].tag == el.tag) ++ordinal;
      }
    } else {
      for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
        if (elements_[j].parent == -1 && elements_[j].tag == el.tag) ++ordinal;
      }
    }
    parts.push_back(el.tag + ":nth-of-type(" + std::to_string(ordinal) + ")");
  }
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += ">";
    out += *it;
  }
  return out;
}

int HtmlDocument::find_by_selector_path(std::string_view path) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (selector_path(static_cast<int>(i)) == path) return static_cast<int>(i);
  }
  return -1;
}

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out.push_back(text[i]);
      continue;
    }
    std::size_t semi = text.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back('&');
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    if (!name.empty() && name[0] == '#') {
      try {
        unsigned long cp = (name.size() > 1 && (name[1] == 'x' || name[1] == 'X'))
                               ? std::stoul(std::string(name.substr(2)), nullptr, 16)
                               : std::stoul(std::string(name.substr(1)));
        append_utf8(out, cp);
        i = semi;
        continue;
      } catch (const std::exception&) {
        out.push_back('&');
        continue;
      }
    }
    if (name == "amp") {
      out.push_back('&');
    } else if (name == "lt") {
      out.push_back('<');
    } else if (name == "gt") {
      out.push_back('>');
    } else if (name == "quot") {
      out.push_back('"');
    } else if (name == "apos") {
      out.push_back('\'');
    } else if (name == "nbsp") {
      out += "\xC2\xA0";
    } else {
      out.push_back('&');
      continue;
    }
    i = semi;
  }
  return out;
}

}  // namespace uiforge
