#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uiforge::detail {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> cells;
};

// RFC 4180 reader: quoted cells may contain commas, doubled quotes and
// newlines. Blank lines are skipped. Throws Error(kParseError) for an
// unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

std::string csv_escape(std::string_view cell);
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace uiforge::detail
