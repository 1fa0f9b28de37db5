#include <gtest/gtest.h>

#include "csv.h"
#include "test_support.h"
#include "uiforge/error.h"
#include "uiforge/suite.h"

namespace uiforge {
namespace {

using testing::TempDir;

std::vector<SuiteBrief> shipped_briefs() { return load_briefs(testing::data_dir() / "briefs" / "table3.json"); }

GenerationEngine stub_engine(StubOptions opts = {}) {
  return GenerationEngine(std::make_shared<const Catalog>(), testing::test_prompt_builder(),
                          std::make_shared<StubProvider>(std::move(opts)));
}

TEST(Suite, BriefsLoad) {
  auto briefs = shipped_briefs();
  ASSERT_EQ(briefs.size(), 5u);
  for (const auto& b : briefs) {
    EXPECT_EQ(b.variations, 5u);
    EXPECT_EQ(b.constraints.colors.size(), 3u);
    EXPECT_EQ(b.constraints.fonts.size(), 3u);
    EXPECT_TRUE(b.constraints.logo);
    EXPECT_FALSE(b.constraints.style);
    EXPECT_FALSE(b.constraints.design_theme);
  }
  EXPECT_EQ(briefs[1].constraints.device, Device::kTablet);
  EXPECT_EQ(briefs[4].constraints.fonts.back(), "Silkscreen");
}

TEST(Suite, BadBriefsFile) {
  TempDir dir;
  testing::write_file(dir.path() / "b.json", R"({"briefs":[{"label":"x","settings":{"schema_version":1,"device":"Watch"}}]})");
  EXPECT_THROW(load_briefs(dir.path() / "b.json"), Error);
  testing::write_file(dir.path() / "c.json", "{nope");
  EXPECT_THROW(load_briefs(dir.path() / "c.json"), Error);
  EXPECT_THROW(load_briefs(dir.path() / "missing.json"), Error);
}

TEST(Suite, StubIsFullyAdherent) {
  GenerationEngine engine = stub_engine();
  SuiteReport report = run_adherence_suite(shipped_briefs(), engine);
  ASSERT_EQ(report.cells.size(), 25u);
  ASSERT_EQ(report.sets.size(), 5u);
  for (const auto& set : report.sets) {
    EXPECT_EQ(set.generated, 5u);
    EXPECT_EQ(set.failed, 0u);
    for (ConstraintClass c : kAllConstraintClasses) {
      EXPECT_EQ(set.pooled.at(c).correct, set.pooled.at(c).total) << set.label << to_string(c);
    }
  }
  for (ConstraintClass c : kAllConstraintClasses) EXPECT_DOUBLE_EQ(*report.mean_percent(c), 100.0);
  EXPECT_EQ(report.pooled(ConstraintClass::kColors).total, 75u);
  EXPECT_EQ(report.pooled(ConstraintClass::kLogo).total, 25u);
}

TEST(Suite, FontScheduleGivesPublishedFontFigure) {
  // Dropped trailing fonts per (set, variation).
  StubOptions opts;
  opts.drop_fonts = font_drop_schedule({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 1}});
  GenerationEngine engine = stub_engine(opts);
  SuiteReport report = run_adherence_suite(shipped_briefs(), engine, {3, 7});
  // Oracle: sets 1-3 keep 15/15; set 4 keeps 1 of 3 in each of 5 designs; set 5 keeps 1,1,1,1,2.
  double expected_mean = (100.0 + 100.0 + 100.0 + 100.0 * 5 / 15 + 100.0 * 6 / 15) / 5;
  ASSERT_TRUE(report.mean_percent(ConstraintClass::kFonts));
  EXPECT_NEAR(*report.mean_percent(ConstraintClass::kFonts), expected_mean, 1e-9);
  EXPECT_NEAR(expected_mean, 74.7, 0.05);
  EXPECT_EQ(report.pooled(ConstraintClass::kFonts).correct, 56u);
  EXPECT_EQ(report.sets[3].pooled.at(ConstraintClass::kFonts).misses.size(), 10u);
  EXPECT_DOUBLE_EQ(*report.mean_percent(ConstraintClass::kColors), 100.0);
}

TEST(Suite, FailuresAreRecordedNotFatal) {
  auto provider = std::make_shared<testing::ScriptedProvider>([](const CompletionRequest& r) -> std::string {
    if (r.tag.find("variation=0") != std::string::npos) return "no html here";
    StubProvider stub;
    return stub.complete(r).raw_text;
  });
  GenerationEngine engine(std::make_shared<const Catalog>(), testing::test_prompt_builder(), provider);
  SuiteReport report = run_adherence_suite(shipped_briefs(), engine, {2, std::nullopt});
  for (const auto& set : report.sets) {
    EXPECT_EQ(set.generated, 4u);
    EXPECT_EQ(set.failed, 1u);
  }
  EXPECT_EQ(provider->requests().size(), 25u);
  std::size_t errors = 0;
  for (const auto& cell : report.cells) errors += !cell.error.empty();
  EXPECT_EQ(errors, 5u);
}

TEST(Suite, CsvAndTable) {
  StubOptions opts;
  opts.drop_fonts = font_drop_schedule({{1}});
  GenerationEngine engine = stub_engine(opts);
  auto briefs = shipped_briefs();
  briefs.resize(2);
  briefs[0].variations = 1;
  briefs[1].variations = 2;
  SuiteReport report = run_adherence_suite(briefs, engine);
  auto rows = detail::parse_csv(suite_csv(report));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].cells[0], "set");
  EXPECT_EQ(rows[0].cells.size(), 16u);
  EXPECT_EQ(rows[1].cells[0], "1");
  EXPECT_EQ(rows[1].cells[2], "1");
  // fonts columns follow colors: correct,total,percent
  EXPECT_EQ(rows[1].cells[7], "2");
  EXPECT_EQ(rows[1].cells[8], "3");
  EXPECT_EQ(rows[1].cells[9], "66.7");
  EXPECT_EQ(rows[3].cells[0], "mean");
  EXPECT_EQ(rows[3].cells[9], "83.3");
  EXPECT_EQ(rows[4].cells[0], "pooled");
  EXPECT_EQ(rows[4].cells[7], "8");
  EXPECT_EQ(rows[4].cells[8], "9");
  std::string table = suite_table(report);
  EXPECT_NE(table.find("Mean"), std::string::npos);
  EXPECT_NE(table.find("66.7%"), std::string::npos);
}

TEST(Suite, Gallery) {
  TempDir dir;
  GenerationEngine engine = stub_engine();
  auto briefs = shipped_briefs();
  briefs.resize(1);
  briefs[0].variations = 2;
  SuiteReport report = run_adherence_suite(briefs, engine);
  write_gallery(report, dir.path() / "gallery");
  std::string index = testing::read_file(dir.path() / "gallery" / "index.html");
  EXPECT_NE(index.find("srcdoc"), std::string::npos);
  EXPECT_NE(index.find("Finance"), std::string::npos);
}

}  // namespace
}  // namespace uiforge
