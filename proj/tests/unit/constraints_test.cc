#include <gtest/gtest.h>

#include "uiforge/constraints.h"

namespace uiforge {
namespace {

ConstraintSet base() {
  ConstraintSet cs;
  cs.industry = "Finance";
  cs.device = Device::kDesktop;
  cs.screen_type = "Home Page";
  cs.colors = {"#2C3E50", "#18BC9C", "#ECF0F1"};
  cs.fonts = {"Orelega One", "Pacifico", "Montserrat"};
  return cs;
}

TEST(Validate, ThreeColorsThreeFontsIsValid) { EXPECT_TRUE(validate(base()).empty()); }

TEST(Validate, SixColorsIsOutOfRange) {
  ConstraintSet cs = base();
  cs.colors = {"#000000", "#111111", "#222222", "#333333", "#444444", "#555555"};
  auto issues = validate(cs);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].field, "colors");
  EXPECT_EQ(issues[0].code, IssueCode::kOutOfRange);
}

TEST(Validate, FourFontsIsOutOfRange) {
  ConstraintSet cs = base();
  cs.fonts = {"A", "B", "C", "D"};
  auto issues = validate(cs);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].field, "fonts");
}

TEST(Validate, MalformedColorIsReportedPerValue) {
  ConstraintSet cs = base();
  cs.colors = {"#GGGGGG", "red", "#12345"};
  auto issues = validate(cs);
  ASSERT_EQ(issues.size(), 3u);
  for (const auto& i : issues) EXPECT_EQ(i.code, IssueCode::kMalformedColor);
}

TEST(Validate, OneIssuePerViolation) {
  ConstraintSet cs = base();
  cs.colors = {"#000000", "#111111", "#222222", "#333333", "#444444", "bad"};
  cs.fonts = {"A", "B", "C", " "};
  auto issues = validate(cs);
  EXPECT_EQ(issues.size(), 4u);  // colors range, bad color, fonts range, blank font
}

TEST(Validate, EmptyListsAreValid) {
  ConstraintSet cs;
  EXPECT_TRUE(validate(cs).empty());
}

TEST(Validate, OutOfRangeEnumsAreFlagged) {
  ConstraintSet cs = base();
  cs.device = static_cast<Device>(9);
  cs.style = static_cast<Style>(9);
  cs.locks.insert(static_cast<Field>(42));
  auto issues = validate(cs);
  ASSERT_EQ(issues.size(), 3u);
  EXPECT_EQ(issues[2].code, IssueCode::kUnknownLockTarget);
  EXPECT_THROW(require_valid(cs), Error);
}

TEST(Colors, Normalization) {
  EXPECT_EQ(normalize_hex_color("#2c3e50"), "#2C3E50");
  EXPECT_EQ(normalize_hex_color("#ABC"), "#AABBCC");
  EXPECT_EQ(normalize_hex_color("#abc"), "#AABBCC");
  EXPECT_FALSE(normalize_hex_color("2C3E50"));
  EXPECT_FALSE(normalize_hex_color("#2C3E5"));
  EXPECT_FALSE(normalize_hex_color("#2C3E50AA"));
  ConstraintSet cs = base();
  cs.colors = {"#abc", "oops"};
  EXPECT_EQ(normalized(cs).colors, (std::vector<std::string>{"#AABBCC", "oops"}));
}

TEST(Viewports, TableEntries) {
  EXPECT_EQ(viewport_for(Device::kDesktop), (Viewport{1440, 900}));
  EXPECT_EQ(viewport_for(Device::kTablet), (Viewport{768, 1024}));
  EXPECT_EQ(viewport_for(Device::kMobile), (Viewport{390, 844}));
}

TEST(Names, WireNamesRoundTrip) {
  for (Device d : kAllDevices) EXPECT_EQ(parse_device(to_string(d)), d);
  for (Style s : kAllStyles) EXPECT_EQ(parse_style(to_string(s)), s);
  for (DesignTheme t : kAllThemes) EXPECT_EQ(parse_design_theme(to_string(t)), t);
  for (Field f : kAllFields) EXPECT_EQ(parse_field(to_string(f)), f);
  EXPECT_EQ(to_string(Style::kDarkMode), "Dark Mode");
  EXPECT_EQ(display_name(DesignTheme::kMaterialDesign), "Material Design");
  EXPECT_FALSE(parse_device("Watch"));
}

TEST(Merge, LockedFieldsKeepCurrentValues) {
  ConstraintSet current = base();
  current.locks = {Field::kColors, Field::kDevice};
  ConstraintSet incoming = base();
  incoming.colors = {"#FFFFFF"};
  incoming.device = Device::kMobile;
  incoming.industry = "Education";
  incoming.locks = {};
  ConstraintSet merged = merge_preserving_locks(current, incoming);
  EXPECT_EQ(merged.colors, current.colors);
  EXPECT_EQ(merged.device, Device::kDesktop);
  EXPECT_EQ(merged.industry, "Education");
  EXPECT_EQ(merged.locks, current.locks);
}

TEST(Merge, NoLocksTakesIncoming) {
  ConstraintSet current = base();
  ConstraintSet incoming;
  incoming.industry = "News";
  ConstraintSet merged = merge_preserving_locks(current, incoming);
  EXPECT_EQ(merged.industry, "News");
  EXPECT_TRUE(merged.colors.empty());
}

TEST(Merge, EveryFieldCanBeLocked) {
  ConstraintSet current = base();
  current.product_purpose = "p";
  current.target_audience = "t";
  current.style = Style::k3D;
  current.design_theme = DesignTheme::kAppleDesign;
  current.logo = "logo1";
  current.features_text = "f";
  ConstraintSet incoming;
  for (Field f : kAllFields) {
    ConstraintSet cur = current;
    cur.locks = {f};
    ConstraintSet merged = merge_preserving_locks(cur, incoming);
    EXPECT_TRUE(field_equal(f, merged, current)) << to_string(f);
    for (Field other : kAllFields) {
      if (other != f) EXPECT_TRUE(field_equal(other, merged, incoming)) << to_string(other);
    }
  }
}

}  // namespace
}  // namespace uiforge
