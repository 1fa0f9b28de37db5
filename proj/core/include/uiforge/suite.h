#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uiforge/adherence.h"
#include "uiforge/engine.h"

namespace uiforge {

// One constraint set of an evaluation run, generated `variations` times.
struct SuiteBrief {
  std::string label;
  ConstraintSet constraints;
  std::size_t variations = 5;
};

// Briefs file: {"briefs": [{"label": ..., "variations": 5, "settings": {...}}]}
// where "settings" is a settings document.
std::vector<SuiteBrief> load_briefs(const std::filesystem::path& path);

struct SuiteCell {
  std::size_t set_index = 0;
  std::size_t variation = 0;
  std::optional<GeneratedDesign> design;
  std::optional<AdherenceReport> report;
  std::string error;  // generation failure, if any
};

struct SuiteSetSummary {
  std::string label;
  std::size_t generated = 0;
  std::size_t failed = 0;
  std::map<ConstraintClass, ClassScore> pooled;
};

struct SuiteReport {
  std::vector<SuiteSetSummary> sets;
  std::vector<SuiteCell> cells;
  double elapsed_seconds = 0;

  // Mean of the per-set percentages over sets where the class applied.
  std::optional<double> mean_percent(ConstraintClass c) const;
  // All cells pooled into one ratio.
  ClassScore pooled(ConstraintClass c) const;
};

struct SuiteOptions {
  std::size_t concurrency = 4;
  // Seed for reference-screen draws; cell (i, j) uses base_seed + i * 1000 + j.
  std::optional<std::uint64_t> base_seed;
};

// Generates every (brief, variation) cell through the engine and scores it.
// Generation failures are recorded per cell and do not stop the run. Each
// request carries the tag "set=<i>;variation=<j>".
SuiteReport run_adherence_suite(const std::vector<SuiteBrief>& briefs, const GenerationEngine& engine,
                                const SuiteOptions& options = {});

// Rows: one per set with correct/total/percent per class, then "mean" and
// "pooled" rows.
std::string suite_csv(const SuiteReport& report);
// Fixed-width table for terminals.
std::string suite_table(const SuiteReport& report);
// Writes index.html with every generated design side by side.
void write_gallery(const SuiteReport& report, const std::filesystem::path& directory);

}  // namespace uiforge
