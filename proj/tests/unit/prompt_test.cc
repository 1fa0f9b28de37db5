#include <gtest/gtest.h>

#include "test_support.h"
#include "uiforge/error.h"
#include "uiforge/prompt.h"

namespace uiforge {
namespace {

using testing::read_file;
using testing::source_dir;

std::string golden(const std::string& name) { return read_file(source_dir() / "golden" / name); }

TEST(Prompt, SystemPromptMatchesGolden) { EXPECT_EQ(build_system_prompt(), golden("system_prompt.txt")); }

TEST(Prompt, SetOneUserPromptMatchesGolden) {
  PromptBuilder builder = testing::test_prompt_builder();
  PromptBundle bundle = builder.build_user_prompt(testing::table3_sets()[0], nullptr);
  EXPECT_EQ(bundle.user_text, golden("user_prompt_set1.txt"));
  EXPECT_EQ(bundle.system_text, build_system_prompt());
  EXPECT_FALSE(bundle.attachment);
  ASSERT_TRUE(bundle.logo);
  EXPECT_EQ(bundle.logo->id, "brand-logo");
}

TEST(Prompt, MaterialThemeExpansionMatchesGolden) {
  EXPECT_EQ(expand_theme(testing::shipped_themes(), DesignTheme::kMaterialDesign), golden("material_theme.txt"));
}

TEST(Prompt, EveryThemeShipped) {
  ThemeLibrary themes = testing::shipped_themes();
  for (DesignTheme t : kAllThemes) {
    ASSERT_TRUE(themes.has(t)) << to_string(t);
    std::string block = expand_theme(themes, t);
    EXPECT_NE(block.find(std::string(display_name(t))), std::string::npos);
    EXPECT_EQ(themes.body(t).rfind("Name: ", 0), 0u);
  }
}

TEST(Prompt, MissingThemeIsNotFound) {
  ThemeLibrary empty;
  try {
    expand_theme(empty, DesignTheme::kAppleDesign);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(Prompt, ResizeEditMatchesGolden) {
  ModificationRequest req;
  req.target_selector = "html:nth-of-type(1)>body:nth-of-type(1)>nav:nth-of-type(1)";
  req.preset_ops = {PresetOp::kResizeSmaller};
  PromptBundle bundle = testing::test_prompt_builder().build_edit_prompt(
      "<!DOCTYPE html><html><body><nav>Menu</nav></body></html>", req);
  EXPECT_EQ(bundle.user_text, golden("edit_prompt_resize.txt"));
  EXPECT_FALSE(bundle.attachment);
}

TEST(Prompt, EditRequiresSomething) {
  PromptBuilder builder = testing::test_prompt_builder();
  ModificationRequest req;
  req.target_selector = "body";
  EXPECT_THROW(builder.build_edit_prompt("<html></html>", req), Error);
  req.free_text = "bigger heading";
  EXPECT_THROW(builder.build_edit_prompt("", req), Error);
  EXPECT_NO_THROW(builder.build_edit_prompt("<html></html>", req));
}

TEST(Prompt, EditFreeTextFollowsPresets) {
  ModificationRequest req;
  req.target_selector = "x";
  req.preset_ops = {PresetOp::kAlterTypography, PresetOp::kResizeLarger};
  req.free_text = "use bold";
  std::string text = testing::test_prompt_builder().build_edit_prompt("<p>", req).user_text;
  auto larger = text.find("- Make the selected element larger");
  auto typo = text.find("- Change the typography of the selected element");
  auto free = text.find("- use bold");
  ASSERT_NE(larger, std::string::npos);
  ASSERT_NE(typo, std::string::npos);
  EXPECT_LT(larger, typo);
  EXPECT_LT(typo, free);
}

TEST(Prompt, ThemeStyleAndReferenceOrdering) {
  ConstraintSet cs = testing::table3_sets()[0];
  cs.style = Style::kDarkMode;
  cs.design_theme = DesignTheme::kCarbonDesign;
  ReferenceScreen ref{"scr-1", "Finance", "Home Page", Device::kDesktop, "images/a.png", "x"};
  PromptBundle bundle = testing::test_prompt_builder().build_user_prompt(cs, &ref);
  const std::string& t = bundle.user_text;
  auto style = t.find("\n- Style: Dark Mode\n");
  auto others = t.find("\n- Others:");
  auto theme_line = t.find("\n- Design Theme: Carbon Design");
  auto expansion = t.find("Please use the following Design Theme: Carbon Design");
  auto reference = t.find(std::string(kReferenceScreenPrompt));
  ASSERT_NE(style, std::string::npos);
  ASSERT_NE(theme_line, std::string::npos);
  ASSERT_NE(expansion, std::string::npos);
  ASSERT_NE(reference, std::string::npos);
  EXPECT_LT(style, others);
  EXPECT_LT(others, theme_line);
  EXPECT_LT(theme_line, expansion);
  EXPECT_LT(expansion, reference);
  EXPECT_EQ(t.substr(t.size() - kReferenceScreenPrompt.size()), kReferenceScreenPrompt);
  ASSERT_TRUE(bundle.attachment);
  EXPECT_EQ(bundle.attachment->id, "scr-1");
}

TEST(Prompt, EmptyFieldsHaveNoTrailingSpace) {
  ConstraintSet cs;
  std::string block = testing::test_prompt_builder().specification_block(cs);
  EXPECT_EQ(block,
            "- Industry:\n- Product Purpose:\n- Target Audience:\n- Device: Desktop\n- Screen Type:\n"
            "- Colors:\n- Fonts:\n- Others:");
}

TEST(Prompt, FingerprintIsDeterministicAndSensitive) {
  PromptBuilder builder = testing::test_prompt_builder();
  ConstraintSet cs = testing::table3_sets()[2];
  ReferenceScreen a{"a", "", "", Device::kMobile, "", ""};
  ReferenceScreen b{"b", "", "", Device::kMobile, "", ""};
  auto p1 = builder.build_user_prompt(cs, &a);
  auto p2 = builder.build_user_prompt(cs, &a);
  auto p3 = builder.build_user_prompt(cs, &b);
  EXPECT_EQ(p1.fingerprint, p2.fingerprint);
  EXPECT_NE(p1.fingerprint, p3.fingerprint);
  EXPECT_EQ(p1.fingerprint.size(), 64u);
  EXPECT_EQ(p1.fingerprint, prompt_fingerprint(p1.system_text, p1.user_text, "a"));
}

TEST(Prompt, LockedValuesAppearVerbatim) {
  Rng rng(3);
  PromptBuilder builder = testing::test_prompt_builder();
  for (int i = 0; i < 50; ++i) {
    ConstraintSet cs = testing::random_constraint_set(rng);
    std::string text = builder.build_user_prompt(cs, nullptr).user_text;
    EXPECT_NE(text.find("- Industry: " + cs.industry), std::string::npos);
    EXPECT_NE(text.find("- Screen Type: " + cs.screen_type), std::string::npos);
    for (const auto& c : cs.colors) EXPECT_NE(text.find(c), std::string::npos);
    for (const auto& f : cs.fonts) EXPECT_NE(text.find(f), std::string::npos);
  }
}

TEST(Prompt, PresetNamesRoundTrip) {
  for (PresetOp op : {PresetOp::kResizeSmaller, PresetOp::kResizeLarger, PresetOp::kAlterColorScheme,
                      PresetOp::kAlterTypography}) {
    EXPECT_EQ(parse_preset_op(to_string(op)), op);
  }
  EXPECT_FALSE(parse_preset_op("explode"));
}

}  // namespace
}  // namespace uiforge
