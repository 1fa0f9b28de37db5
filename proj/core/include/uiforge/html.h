#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uiforge {

struct HtmlElement {
  std::string tag;  // lowercase
  std::vector<std::pair<std::string, std::string>> attributes;  // lowercase names, decoded values
  int parent = -1;
  std::vector<int> children;
  // Unparsed content of raw-text elements (style, script, textarea, title).
  std::string raw_text;

  const std::string* attr(std::string_view name) const;
  std::vector<std::string> classes() const;
};

// Tolerant element tree for generated markup. Text nodes other than raw-text
// element content are dropped; implied end tags are not inferred.
class HtmlDocument {
 public:
  // Throws Error(kParseError) when the input holds no element at all or ends
  // inside a tag or comment.
  static HtmlDocument parse(std::string_view html);

  const std::vector<HtmlElement>& elements() const { return elements_; }
  const HtmlElement& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

  // Indices of elements with the given lowercase tag, in document order.
  std::vector<int> by_tag(std::string_view tag) const;
  int first(std::string_view tag) const;  // -1 when absent

  // Tag + ordinal path, e.g. "html>body>div:nth-of-type(2)>nav:nth-of-type(1)".
  std::string selector_path(int index) const;
  int find_by_selector_path(std::string_view path) const;

 private:
  std::vector<HtmlElement> elements_;
};

std::string html_escape(std::string_view text);

// Decodes named (amp, lt, gt, quot, apos, nbsp) and numeric character
// references.
std::string decode_entities(std::string_view text);

}  // namespace uiforge
