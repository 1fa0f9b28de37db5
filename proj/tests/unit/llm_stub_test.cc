#include <gtest/gtest.h>

#include <cstdlib>

#include "test_support.h"
#include "uiforge/engine.h"
#include "uiforge/error.h"
#include "uiforge/llm.h"

namespace uiforge {
namespace {

CompletionRequest generation_request(const ConstraintSet& cs, std::string tag = {}) {
  PromptBundle b = testing::test_prompt_builder().build_user_prompt(cs, nullptr);
  CompletionRequest req;
  req.system_text = b.system_text;
  req.user_text = b.user_text;
  req.model_id = "stub-model";
  req.tag = std::move(tag);
  return req;
}

TEST(Request, Validation) {
  CompletionRequest req;
  EXPECT_THROW(require_valid(req), Error);
  req.model_id = "m";
  EXPECT_NO_THROW(require_valid(req));
  req.temperature = 2.5;
  EXPECT_THROW(require_valid(req), Error);
  req.temperature = 0;
  req.images.resize(3);
  EXPECT_THROW(require_valid(req), Error);
}

TEST(Stub, ParsesSpecification) {
  auto spec = StubProvider::parse_specification(generation_request(testing::table3_sets()[0]).user_text);
  EXPECT_EQ(spec["Industry"], "Finance");
  EXPECT_EQ(spec["Colors"], "#2C3E50, #18BC9C, #ECF0F1");
  EXPECT_EQ(spec["Logo URL"], "Full: https://assets.example.test/assets/brand-logo");
  EXPECT_EQ(spec["Others"], "");
}

TEST(Stub, DeterministicForSameRequest) {
  StubProvider stub;
  auto req = generation_request(testing::table3_sets()[1]);
  EXPECT_EQ(stub.complete(req).raw_text, stub.complete(req).raw_text);
  EXPECT_EQ(stub.complete(req).provider_label, "stub");
}

TEST(Stub, EmbedsEveryConstraint) {
  StubProvider stub;
  for (const auto& cs : testing::table3_sets()) {
    std::string html = extract_html(stub.complete(generation_request(cs)).raw_text);
    for (const auto& c : cs.colors) EXPECT_NE(html.find(c), std::string::npos) << c;
    for (const auto& f : cs.fonts) EXPECT_NE(html.find(f), std::string::npos) << f;
    EXPECT_NE(html.find("https://assets.example.test/assets/brand-logo"), std::string::npos);
    EXPECT_NO_THROW(HtmlDocument::parse(html));
  }
}

TEST(Stub, FontDropSchedule) {
  StubOptions opts;
  opts.drop_fonts = font_drop_schedule({{0, 1}, {2}});
  StubProvider stub(opts);
  ConstraintSet cs = testing::table3_sets()[0];
  std::string kept = extract_html(stub.complete(generation_request(cs, "set=0;variation=0")).raw_text);
  std::string one = extract_html(stub.complete(generation_request(cs, "set=0;variation=1")).raw_text);
  std::string two = extract_html(stub.complete(generation_request(cs, "set=1;variation=0")).raw_text);
  std::string untagged = extract_html(stub.complete(generation_request(cs)).raw_text);
  EXPECT_NE(kept.find("Montserrat"), std::string::npos);
  EXPECT_EQ(one.find("Montserrat"), std::string::npos);
  EXPECT_NE(one.find("Pacifico"), std::string::npos);
  EXPECT_EQ(two.find("Pacifico"), std::string::npos);
  EXPECT_NE(two.find("Orelega"), std::string::npos);
  EXPECT_NE(untagged.find("Montserrat"), std::string::npos);
}

TEST(Stub, AppliesEdit) {
  StubProvider stub;
  ModificationRequest mod{"body", {PresetOp::kResizeLarger}, "no -- dashes"};
  PromptBundle b = testing::test_prompt_builder().build_edit_prompt("<html><body><p>x</p></body></html>", mod);
  CompletionRequest req;
  req.system_text = b.system_text;
  req.user_text = b.user_text;
  req.model_id = "m";
  std::string html = extract_html(stub.complete(req).raw_text);
  EXPECT_NE(html.find("applied edit: Make the selected element larger"), std::string::npos);
  EXPECT_NE(html.find("<p>x</p>"), std::string::npos);
  EXPECT_NO_THROW(HtmlDocument::parse(html));
}

TEST(Tags, Parse) {
  auto t = parse_tag("set=1;variation=4;x");
  EXPECT_EQ(t["set"], "1");
  EXPECT_EQ(t["variation"], "4");
  EXPECT_EQ(t.count("x"), 0u);
  EXPECT_TRUE(parse_tag("").empty());
}

TEST(LlmSettings, FromEnvironment) {
  ::setenv("UIFORGE_LLM_PROVIDER", "http", 1);
  ::setenv("UIFORGE_LLM_ENDPOINT", "http://127.0.0.1:9/v1/chat/completions", 1);
  ::setenv("UIFORGE_LLM_API_KEY", "sk-test", 1);
  ::setenv("UIFORGE_LLM_MODEL", "model-x", 1);
  ::setenv("UIFORGE_LLM_TIMEOUT", "7", 1);
  LlmSettings s = llm_settings_from_env();
  EXPECT_EQ(s.kind, ProviderKind::kHttp);
  EXPECT_EQ(s.http.api_key, "sk-test");
  EXPECT_EQ(s.model_id, "model-x");
  EXPECT_EQ(s.http.timeout.count(), 7);
  ::setenv("UIFORGE_LLM_PROVIDER", "carrier-pigeon", 1);
  EXPECT_THROW(llm_settings_from_env(), Error);
  for (const char* k : {"UIFORGE_LLM_PROVIDER", "UIFORGE_LLM_ENDPOINT", "UIFORGE_LLM_API_KEY", "UIFORGE_LLM_MODEL",
                        "UIFORGE_LLM_TIMEOUT"}) {
    ::unsetenv(k);
  }
  EXPECT_EQ(llm_settings_from_env().kind, ProviderKind::kStub);
}

TEST(LlmSettings, FromFile) {
  testing::TempDir dir;
  testing::write_file(dir.path() / "llm.json",
                      R"({"llm":{"provider":"http","endpoint":"http://localhost:1/x","api_key":"k","model":"m2",)"
                      R"("timeout_seconds":3,"concurrency":2,"edit_temperature":0.1}})");
  LlmSettings s = llm_settings_from_file((dir.path() / "llm.json").string());
  EXPECT_EQ(s.kind, ProviderKind::kHttp);
  EXPECT_EQ(s.http.max_in_flight, 2);
  EXPECT_DOUBLE_EQ(s.edit_temperature, 0.1);
  EXPECT_EQ(s.model_id, "m2");
  EXPECT_THROW(llm_settings_from_file((dir.path() / "none.json").string()), Error);
  auto p = make_provider(LlmSettings{});
  EXPECT_EQ(p->label(), "stub");
  EXPECT_EQ(make_provider(s)->label(), "http");
}

}  // namespace
}  // namespace uiforge
