#include "uiforge/suite.h"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "settings_json.h"
#include "uiforge/error.h"
#include "uiforge/html.h"

namespace uiforge {

std::vector<SuiteBrief> load_briefs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "briefs file not found: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what()).with_offset(e.byte);
  }
  if (!doc.is_object() || !doc.contains("briefs") || !doc["briefs"].is_array()) {
    throw Error(ErrorCode::kParseError, path.string() + ": expected {\"briefs\": [...]}");
  }
  std::vector<SuiteBrief> briefs;
  for (const auto& item : doc["briefs"]) {
    if (!item.is_object() || !item.contains("settings")) {
      throw Error(ErrorCode::kParseError, path.string() + ": brief without settings");
    }
    SuiteBrief brief;
    brief.label = item.value("label", "set " + std::to_string(briefs.size() + 1));
    brief.variations = item.value("variations", std::size_t{5});
    brief.constraints = detail::settings_from_json(item["settings"]);
    briefs.push_back(std::move(brief));
  }
  return briefs;
}

std::optional<double> SuiteReport::mean_percent(ConstraintClass c) const {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& set : sets) {
    auto it = set.pooled.find(c);
    if (it == set.pooled.end()) continue;
    if (auto p = it->second.percent()) {
      sum += *p;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

ClassScore SuiteReport::pooled(ConstraintClass c) const {
  ClassScore out;
  for (const auto& set : sets) {
    if (auto it = set.pooled.find(c); it != set.pooled.end()) out += it->second;
  }
  return out;
}

SuiteReport run_adherence_suite(const std::vector<SuiteBrief>& briefs, const GenerationEngine& engine,
                                const SuiteOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  for (std::size_t i = 0; i < briefs.size(); ++i) {
    for (std::size_t j = 0; j < briefs[i].variations; ++j) {
      SuiteCell cell;
      cell.set_index = i;
      cell.variation = j;
      report.cells.push_back(std::move(cell));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < report.cells.size(); k = next++) {
      SuiteCell& cell = report.cells[k];
      GenerateOptions gen;
      gen.tag = "set=" + std::to_string(cell.set_index) + ";variation=" + std::to_string(cell.variation);
      if (options.base_seed) gen.seed = *options.base_seed + cell.set_index * 1000 + cell.variation;
      try {
        cell.design = engine.generate(briefs[cell.set_index].constraints, gen);
        cell.report = engine.evaluate(*cell.design);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  std::size_t threads = std::max<std::size_t>(1, std::min(options.concurrency, report.cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  report.sets.resize(briefs.size());
  for (std::size_t i = 0; i < briefs.size(); ++i) {
    report.sets[i].label = briefs[i].label;
    for (ConstraintClass c : kAllConstraintClasses) report.sets[i].pooled[c];
  }
  for (const auto& cell : report.cells) {
    auto& set = report.sets[cell.set_index];
    if (!cell.report) {
      ++set.failed;
      continue;
    }
    ++set.generated;
    for (const auto& [c, score] : cell.report->scores) set.pooled[c] += score;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string percent_cell(std::optional<double> p) {
  if (!p) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *p);
  return buf;
}

}  // namespace

std::string suite_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "set,label,generated,failed";
  for (ConstraintClass c : kAllConstraintClasses) {
    auto n = to_string(c);
    out << ',' << n << "_correct," << n << "_total," << n << "_percent";
  }
  out << '\n';
  for (std::size_t i = 0; i < report.sets.size(); ++i) {
    const auto& set = report.sets[i];
    out << (i + 1) << ',' << csv_cell(set.label) << ',' << set.generated << ',' << set.failed;
    for (ConstraintClass c : kAllConstraintClasses) {
      const ClassScore& s = set.pooled.at(c);
      out << ',' << s.correct << ',' << s.total << ',' << percent_cell(s.percent());
    }
    out << '\n';
  }
  out << "mean,,,";
  for (ConstraintClass c : kAllConstraintClasses) out << ",,," << percent_cell(report.mean_percent(c));
  out << '\n';
  std::size_t generated = 0, failed = 0;
  for (const auto& set : report.sets) {
    generated += set.generated;
    failed += set.failed;
  }
  out << "pooled,," << generated << ',' << failed;
  for (ConstraintClass c : kAllConstraintClasses) {
    ClassScore s = report.pooled(c);
    out << ',' << s.correct << ',' << s.total << ',' << percent_cell(s.percent());
  }
  out << '\n';
  return out.str();
}

std::string suite_table(const SuiteReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-28s %9s %9s %9s %9s %9s\n", "Set", "Label", "Designs",
                "Colors", "Fonts", "Device", "Logo");
  out << line;
  for (std::size_t i = 0; i < report.sets.size(); ++i) {
    const auto& set = report.sets[i];
    std::string designs = std::to_string(set.generated) + "/" + std::to_string(set.generated + set.failed);
    std::snprintf(line, sizeof line, "%-6zu %-28.28s %9s %9s %9s %9s %9s\n", i + 1, set.label.c_str(),
                  designs.c_str(), format_percent(set.pooled.at(ConstraintClass::kColors)).c_str(),
                  format_percent(set.pooled.at(ConstraintClass::kFonts)).c_str(),
                  format_percent(set.pooled.at(ConstraintClass::kDevice)).c_str(),
                  format_percent(set.pooled.at(ConstraintClass::kLogo)).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "%-6s %-28s %9s %9s %9s %9s %9s\n", "Mean", "", "",
                format_percent(report.mean_percent(ConstraintClass::kColors)).c_str(),
                format_percent(report.mean_percent(ConstraintClass::kFonts)).c_str(),
                format_percent(report.mean_percent(ConstraintClass::kDevice)).c_str(),
                format_percent(report.mean_percent(ConstraintClass::kLogo)).c_str());
  out << line;
  std::snprintf(line, sizeof line, "elapsed %.2fs\n", report.elapsed_seconds);
  out << line;
  return out.str();
}

void write_gallery(const SuiteReport& report, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  std::ofstream out(directory / "index.html");
  if (!out) throw Error(ErrorCode::kIoError, "cannot write gallery in " + directory.string());
  out << "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>Adherence gallery</title>\n"
         "<style>body{font-family:sans-serif;margin:16px}.row{display:flex;gap:12px;overflow-x:auto}"
         ".cell{flex:0 0 auto}iframe{width:480px;height:320px;border:1px solid #ccc}"
         ".miss{color:#b00;font-size:12px}</style></head><body>\n";
  for (std::size_t i = 0; i < report.sets.size(); ++i) {
    out << "<h2>" << (i + 1) << ". " << html_escape(report.sets[i].label) << "</h2>\n<div class=\"row\">\n";
    for (const auto& cell : report.cells) {
      if (cell.set_index != i) continue;
      out << "<div class=\"cell\"><div>variation " << (cell.variation + 1) << "</div>";
      if (cell.design) {
        out << "<iframe sandbox srcdoc=\"" << html_escape(cell.design->html_document) << "\"></iframe>";
      }
      if (!cell.error.empty()) out << "<div class=\"miss\">" << html_escape(cell.error) << "</div>";
      if (cell.report) {
        for (const auto& [c, score] : cell.report->scores) {
          for (const auto& miss : score.misses) {
            out << "<div class=\"miss\">" << to_string(c) << ": " << html_escape(miss) << "</div>";
          }
        }
      }
      out << "</div>\n";
    }
    out << "</div>\n";
  }
  out << "</body></html>\n";
}

}  // namespace uiforge
