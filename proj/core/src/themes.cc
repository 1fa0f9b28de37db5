#include <fstream>
#include <sstream>

#include "uiforge/error.h"
#include "uiforge/prompt.h"

namespace uiforge {

ThemeLibrary ThemeLibrary::load(const std::filesystem::path& directory) {
  ThemeLibrary library;
  for (DesignTheme theme : kAllThemes) {
    auto path = directory / (std::string(to_string(theme)) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) continue;
    std::ostringstream ss;
    ss << in.rdbuf();
    library.set(theme, ss.str());
  }
  return library;
}

void ThemeLibrary::set(DesignTheme theme, std::string body) {
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ')) {
    body.pop_back();
  }
  bodies_[theme] = std::move(body);
}

const std::string& ThemeLibrary::body(DesignTheme theme) const {
  auto it = bodies_.find(theme);
  if (it == bodies_.end()) {
    throw Error(ErrorCode::kNotFound,
                "no expansion data for design theme " + std::string(to_string(theme)));
  }
  return it->second;
}

std::string expand_theme(const ThemeLibrary& themes, DesignTheme theme) {
  std::string out = "Please use the following Design Theme: ";
  out += display_name(theme);
  out +=
      " specifications below. Ignore the Design Theme color and font settings if already "
      "provided in the previous specification.\n\n";
  out += themes.body(theme);
  return out;
}

}  // namespace uiforge
