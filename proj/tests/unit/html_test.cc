#include <gtest/gtest.h>

#include "uiforge/error.h"
#include "uiforge/html.h"

namespace uiforge {
namespace {

TEST(Html, BuildsTree) {
  auto doc = HtmlDocument::parse(
      "<!DOCTYPE html><html lang=en><head><meta charset=\"utf-8\"><title>a<b</title></head>"
      "<body class=\"flex  bg-white\"><div id='x'><p>one</p><p>two</p></div><br/></body></html>");
  int body = doc.first("body");
  ASSERT_GE(body, 0);
  EXPECT_EQ(doc.element(body).classes(), (std::vector<std::string>{"flex", "bg-white"}));
  EXPECT_EQ(doc.by_tag("p").size(), 2u);
  int title = doc.first("title");
  EXPECT_EQ(doc.element(title).raw_text, "a<b");
  int div = doc.first("div");
  ASSERT_NE(doc.element(div).attr("id"), nullptr);
  EXPECT_EQ(*doc.element(div).attr("id"), "x");
  EXPECT_EQ(doc.element(div).parent, body);
  EXPECT_EQ(doc.first("br") >= 0, true);
  EXPECT_EQ(doc.element(doc.first("br")).parent, body);
  EXPECT_EQ(*doc.element(doc.first("html")).attr("lang"), "en");
}

TEST(Html, VoidElementsDoNotNest) {
  auto doc = HtmlDocument::parse("<body><img src=a.png><input type=text><p>x</p></body>");
  int p = doc.first("p");
  EXPECT_EQ(doc.element(p).parent, doc.first("body"));
}

TEST(Html, RawTextElements) {
  auto doc = HtmlDocument::parse("<style>p > a { color: red }</style><script>if (a < b) {}</script>");
  EXPECT_EQ(doc.element(doc.first("style")).raw_text, "p > a { color: red }");
  EXPECT_EQ(doc.element(doc.first("script")).raw_text, "if (a < b) {}");
}

TEST(Html, SelectorPathRoundTrip) {
  auto doc = HtmlDocument::parse("<html><body><nav>Menu</nav><div></div><div><nav></nav></div></body></html>");
  int first_nav = doc.first("nav");
  EXPECT_EQ(doc.selector_path(first_nav), "html:nth-of-type(1)>body:nth-of-type(1)>nav:nth-of-type(1)");
  int inner = doc.by_tag("nav")[1];
  EXPECT_EQ(doc.selector_path(inner),
            "html:nth-of-type(1)>body:nth-of-type(1)>div:nth-of-type(2)>nav:nth-of-type(1)");
  for (std::size_t i = 0; i < doc.elements().size(); ++i) {
    EXPECT_EQ(doc.find_by_selector_path(doc.selector_path(static_cast<int>(i))), static_cast<int>(i));
  }
  EXPECT_EQ(doc.find_by_selector_path("html>aside"), -1);
}

TEST(Html, EntitiesDecodedInAttributes) {
  auto doc = HtmlDocument::parse("<a title=\"a &amp; b &#65;&#x42; &lt;&nbsp;\"></a>");
  EXPECT_EQ(*doc.element(0).attr("title"), "a & b AB <\xC2\xA0");
  EXPECT_EQ(decode_entities("&quot;&apos;&unknown;"), "\"'&unknown;");
  EXPECT_EQ(html_escape("<a href=\"x\">&'"), "&lt;a href=&quot;x&quot;&gt;&amp;&#39;");
}

TEST(Html, CommentsSkipped) {
  auto doc = HtmlDocument::parse("<!-- <div> --><p></p>");
  EXPECT_EQ(doc.elements().size(), 1u);
}

TEST(Html, RejectsNonHtml) {
  EXPECT_THROW(HtmlDocument::parse("just prose"), Error);
  EXPECT_THROW(HtmlDocument::parse(""), Error);
  EXPECT_THROW(HtmlDocument::parse("<div class=\"x"), Error);
  EXPECT_THROW(HtmlDocument::parse("<p><!-- open"), Error);
}

TEST(Html, StrayEndTagsTolerated) {
  auto doc = HtmlDocument::parse("<div></span></div></div><p></p>");
  EXPECT_EQ(doc.elements().size(), 2u);
  EXPECT_EQ(doc.element(1).parent, -1);
}

}  // namespace
}  // namespace uiforge
