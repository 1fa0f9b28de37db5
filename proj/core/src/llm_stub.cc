#include <chrono>
#include <sstream>

#include "uiforge/constraints.h"
#include "uiforge/crypto.h"
#include "uiforge/html.h"
#include "uiforge/llm.h"

namespace uiforge {
namespace {

constexpr std::string_view kSpecHeader = "Here is the specification for the design:";
constexpr std::string_view kOriginalMarker = "This is the original design\n- ";
constexpr std::string_view kEditTail = "\n\nPlease update the design accordingly.";

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    std::string_view item = value.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

std::string google_family_param(std::string_view font) {
  std::string out;
  for (char c : font) out.push_back(c == ' ' ? '+' : c);
  return out;
}

std::string fenced(std::string_view document) {
  std::string out = "```html\n";
  out += document;
  out += "\n```";
  return out;
}

std::string value_or(const std::map<std::string, std::string>& spec, const std::string& key,
                     std::string_view fallback) {
  auto it = spec.find(key);
  return it == spec.end() || it->second.empty() ? std::string(fallback) : it->second;
}

std::string generate_page(const CompletionRequest& request, std::size_t drop_fonts) {
  auto spec = StubProvider::parse_specification(request.user_text);
  const std::string industry = value_or(spec, "Industry", "General");
  const std::string screen = value_or(spec, "Screen Type", "Home Page");
  const std::string purpose = value_or(spec, "Product Purpose", "A product built for its users.");
  const std::string audience = value_or(spec, "Target Audience", "everyone");
  const Device device = parse_device(value_or(spec, "Device", "Desktop")).value_or(Device::kDesktop);
  const Viewport vp = viewport_for(device);
  const auto colors = split_list(value_or(spec, "Colors", ""));
  auto fonts = split_list(value_or(spec, "Fonts", ""));
  fonts.resize(fonts.size() > drop_fonts ? fonts.size() - drop_fonts : 0);

  std::string logo_url;
  if (auto it = spec.find("Logo URL"); it != spec.end()) {
    std::string_view v = it->second;
    if (v.starts_with("Full:")) v.remove_prefix(5);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    logo_url = std::string(v);
  }

  std::string seed_material = request.user_text;
  for (const auto& image : request.images) seed_material += image.id;
  const int variant = static_cast<int>(std::stoul(sha256_hex(seed_material).substr(0, 2), nullptr, 16) % 3);

  auto font_class = [&](std::size_t i) -> std::string {
    if (fonts.empty()) return "";
    return " font-custom-" + std::to_string(i % fonts.size() + 1);
  };
  auto color = [&](std::size_t i) -> std::string {
    return colors.empty() ? std::string() : colors[i % colors.size()];
  };

  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n"
       << "<meta charset=\"UTF-8\">\n"
       << "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1.0\">\n"
       << "<title>" << html_escape(screen) << " | " << html_escape(industry) << "</title>\n"
       << "<script src=\"https://cdn.tailwindcss.com\"></script>\n";
  if (!fonts.empty()) {
    html << "<link rel=\"stylesheet\" href=\"https://fonts.googleapis.com/css2?";
    for (const auto& f : fonts) html << "family=" << google_family_param(f) << "&amp;";
    html << "display=swap\">\n";
  }
  html << "<style>\n"
       << "  .app-root { width: 100%; max-width: " << vp.width << "px; min-height: " << vp.height
       << "px; margin: 0 auto; }\n";
  for (std::size_t i = 0; i < fonts.size(); ++i) {
    html << "  .font-custom-" << i + 1 << " { font-family: '" << fonts[i] << "', sans-serif; }\n";
  }
  html << "</style>\n</head>\n";
  html << "<body class=\"antialiased\"";
  if (!colors.empty()) html << " style=\"background-color: " << color(colors.size() - 1) << ";\"";
  html << ">\n";
  html << "<div class=\"app-root\" data-device=\"" << to_string(device) << "\" data-variant=\""
       << variant << "\">\n";

  html << "  <header class=\"flex items-center justify-between p-6" << font_class(0) << "\"";
  if (!colors.empty()) {
    html << " style=\"background-color: " << color(0) << "; color: " << color(colors.size() - 1)
         << ";\"";
  }
  html << ">\n";
  if (!logo_url.empty()) {
    html << "    <img src=\"" << html_escape(logo_url) << "\" alt=\"Logo\" class=\"h-10\">\n";
  }
  html << "    <h1 class=\"text-2xl\">" << html_escape(industry) << "</h1>\n"
       << "    <nav class=\"flex gap-4\"><a href=\"#\">Home</a><a href=\"#\">Explore</a>"
       << "<a href=\"#\">Account</a></nav>\n"
       << "  </header>\n";

  html << "  <main class=\"" << (variant == 0 ? "flex flex-col gap-6" : variant == 1 ? "grid grid-cols-2 gap-6" : "space-y-4")
       << " p-6\">\n";
  html << "    <section class=\"p-6" << font_class(1) << "\"";
  if (colors.size() > 1) html << " style=\"color: " << color(1) << ";\"";
  html << ">\n      <h2 class=\"text-xl\">" << html_escape(screen) << "</h2>\n"
       << "      <p>" << html_escape(purpose) << "</p>\n"
       << "      <p>Designed for " << html_escape(audience) << ".</p>\n"
       << "      <img src=\"https://placehold.co/600x400\" alt=\"Placeholder\">\n"
       << "    </section>\n";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    html << "    <div class=\"rounded p-4" << font_class(i) << "\" style=\"background-color: "
         << colors[i] << ";\">Card " << i + 1 << "</div>\n";
  }
  html << "  </main>\n";
  html << "  <footer class=\"p-6" << font_class(fonts.empty() ? 0 : fonts.size() - 1) << "\"";
  if (!colors.empty()) html << " style=\"border-top: 1px solid " << color(0) << ";\"";
  html << ">&copy; " << html_escape(industry) << "</footer>\n";
  html << "</div>\n</body>\n</html>";
  return html.str();
}

std::string apply_edit(const CompletionRequest& request) {
  std::string_view text = request.user_text;
  auto start = text.find(kOriginalMarker);
  auto end = text.rfind(kEditTail);
  if (start == std::string_view::npos || end == std::string_view::npos || end < start) {
    return "I could not find the original design in the request.";
  }
  std::string document(text.substr(start + kOriginalMarker.size(),
                                   end - start - kOriginalMarker.size()));
  std::string changes;
  auto list = text.find("Make the following changes:");
  if (list != std::string_view::npos) {
    std::string_view rest = text.substr(list, start - list);
    std::istringstream lines{std::string(rest)};
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      if (!line.starts_with("- ")) continue;
      if (!changes.empty()) changes += "; ";
      changes += line.substr(2);
    }
  }
  // Keep the comment well-formed whatever the user typed.
  std::string safe;
  for (std::size_t i = 0; i < changes.size(); ++i) {
    if (changes.compare(i, 2, "--") == 0) {
      safe += "- ";
      ++i;
    } else {
      safe.push_back(changes[i]);
    }
  }
  std::string note = "<!-- applied edit: " + safe + " -->\n";
  auto body_end = document.rfind("</body>");
  if (body_end == std::string::npos) {
    document += "\n" + note;
  } else {
    document.insert(body_end, note);
  }
  return document;
}

}  // namespace

StubProvider::StubProvider(StubOptions options) : options_(std::move(options)) {}

std::map<std::string, std::string> StubProvider::parse_specification(std::string_view user_text) {
  std::map<std::string, std::string> out;
  auto pos = user_text.find(kSpecHeader);
  if (pos == std::string_view::npos) return out;
  std::istringstream lines{std::string(user_text.substr(pos + kSpecHeader.size()))};
  std::string line;
  std::getline(lines, line);  // remainder of the header line
  while (std::getline(lines, line)) {
    if (!line.starts_with("- ")) break;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(2, colon - 2);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    out.emplace(std::move(key), std::move(value));
  }
  return out;
}

CompletionResult StubProvider::complete(const CompletionRequest& request) {
  require_valid(request);
  auto started = std::chrono::steady_clock::now();
  std::string document;
  if (request.user_text.find(kOriginalMarker) != std::string::npos) {
    document = apply_edit(request);
  } else {
    std::size_t drop = options_.drop_fonts ? options_.drop_fonts(request) : 0;
    document = generate_page(request, drop);
  }
  CompletionResult result;
  result.raw_text = fenced(document);
  result.provider_label = label();
  result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return result;
}

}  // namespace uiforge
