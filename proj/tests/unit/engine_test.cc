#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "test_support.h"
#include "uiforge/engine.h"
#include "uiforge/error.h"

namespace uiforge {
namespace {

namespace fs = std::filesystem;

using testing::ScriptedProvider;
using testing::TempDir;

const char* kPage = "<!DOCTYPE html><html><body><nav>Menu</nav></body></html>";

std::string fenced(const std::string& html) { return "Here you go:\n```html\n" + html + "\n```\n"; }

struct Fixture {
  TempDir dir;
  std::shared_ptr<const Catalog> catalog;
  std::shared_ptr<ScriptedProvider> provider;
  std::unique_ptr<GenerationEngine> engine;

  explicit Fixture(ScriptedProvider::Script script = [](const CompletionRequest&) { return fenced(kPage); },
                   EngineConfig config = {}) {
    catalog = std::make_shared<const Catalog>(load_catalog(
        testing::make_catalog(dir.path(), {"Finance", "News"}, {"Home Page", "Login Page"}, {{3, 1}, {2, 0}})));
    provider = std::make_shared<ScriptedProvider>(std::move(script));
    engine = std::make_unique<GenerationEngine>(catalog, testing::test_prompt_builder(), provider, std::move(config));
  }
};

ConstraintSet finance() { return testing::table3_sets()[0]; }

TEST(Extract, FixtureOracles) {
  fs::path dir = testing::source_dir() / "fixtures" / "extract";
  int cases = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    ++cases;
    std::string input = testing::read_file(entry.path());
    fs::path expected = entry.path();
    expected.replace_extension(".expected");
    fs::path malformed = entry.path();
    malformed.replace_extension(".malformed");
    if (fs::exists(malformed)) {
      try {
        extract_html(input);
        ADD_FAILURE() << entry.path().filename() << " should be malformed";
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kGenerationMalformed) << entry.path().filename();
        EXPECT_EQ(e.stage(), "extract");
      }
    } else {
      ASSERT_TRUE(fs::exists(expected)) << expected;
      EXPECT_EQ(extract_html(input), testing::read_file(expected)) << entry.path().filename();
    }
  }
  EXPECT_EQ(cases, 20);
}

TEST(Engine, GenerateRecordsProvenance) {
  Fixture f;
  GenerateOptions opts;
  opts.seed = 42;
  opts.tag = "t1";
  GeneratedDesign d = f.engine->generate(finance(), opts);
  EXPECT_EQ(d.html_document, kPage);
  EXPECT_EQ(d.device_viewport, (Viewport{1440, 900}));
  ASSERT_TRUE(d.reference_screen_id);
  EXPECT_EQ(d.reference_screen_id->rfind("scr-0-0-", 0), 0u);
  EXPECT_EQ(d.constraints_snapshot, normalized(finance()));
  EXPECT_EQ(d.provider_label, "scripted");
  EXPECT_FALSE(d.edit);
  EXPECT_EQ(d.id.size(), 36u);
  EXPECT_NE(d.id, d.slot_id);
  EXPECT_GE(d.total_ms, d.provider_ms);
  EXPECT_FALSE(d.created_at.empty());

  auto reqs = f.provider->requests();
  ASSERT_EQ(reqs.size(), 1u);
  EXPECT_EQ(reqs[0].tag, "t1");
  EXPECT_EQ(reqs[0].system_text, build_system_prompt());
  EXPECT_DOUBLE_EQ(reqs[0].temperature, 0.9);
  ASSERT_EQ(reqs[0].images.size(), 1u);
  EXPECT_EQ(reqs[0].images[0].id, *d.reference_screen_id);
  EXPECT_EQ(reqs[0].images[0].mime, "image/png");
  EXPECT_EQ(sniff_image_mime(reqs[0].images[0].data), "image/png");
  EXPECT_EQ(f.engine->rebuild_prompt(d).fingerprint, d.prompt_fingerprint);
  EXPECT_EQ(f.engine->rebuild_prompt(d).user_text, reqs[0].user_text);
}

TEST(Engine, SeedMakesReferenceDrawReplayable) {
  Fixture f;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenerateOptions opts;
    opts.seed = seed;
    EXPECT_EQ(f.engine->generate(finance(), opts).reference_screen_id,
              f.engine->generate(finance(), opts).reference_screen_id);
  }
}

TEST(Engine, NoMatchingScreenSendsNoImage) {
  Fixture f;
  ConstraintSet cs = finance();
  cs.industry = "Education";
  cs.logo.reset();
  GeneratedDesign d = f.engine->generate(cs);
  EXPECT_FALSE(d.reference_screen_id);
  EXPECT_TRUE(f.provider->requests()[0].images.empty());
  EXPECT_EQ(f.provider->requests()[0].user_text.find(std::string(kReferenceScreenPrompt)), std::string::npos);
}

TEST(Engine, LogoSentAsSecondImage) {
  EngineConfig config;
  config.load_asset = [](std::string_view id) -> std::optional<AssetBlob> {
    if (id != "brand-logo") return std::nullopt;
    return AssetBlob{"image/png", testing::gray_png(2, 2, 9)};
  };
  Fixture f([](const CompletionRequest&) { return fenced(kPage); }, config);
  f.engine->generate(finance());
  auto images = f.provider->requests()[0].images;
  ASSERT_EQ(images.size(), 2u);
  EXPECT_EQ(images[1].id, "brand-logo");

  GeneratedDesign d = f.engine->generate(finance());
  EvaluationContext ctx = f.engine->evaluation_context(d);
  ASSERT_EQ(ctx.logo_refs.size(), 2u);
  EXPECT_EQ(ctx.logo_refs[0], "https://assets.example.test/assets/brand-logo");
  EXPECT_EQ(ctx.logo_refs[1].rfind("data:image/png;base64,", 0), 0u);

  ConstraintSet cs = finance();
  cs.logo = "missing";
  try {
    f.engine->generate(cs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
    EXPECT_EQ(e.stage(), "assets");
  }
}

TEST(Engine, InvalidConstraintsNeverReachProvider) {
  Fixture f;
  ConstraintSet cs = finance();
  cs.colors.push_back("#12");
  try {
    f.engine->generate(cs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
  }
  EXPECT_TRUE(f.provider->requests().empty());
}

TEST(Engine, ProviderFailureCarriesStage) {
  Fixture f([](const CompletionRequest&) -> std::string {
    throw Error(ErrorCode::kProviderError, "upstream 503").with_http_status(503);
  });
  try {
    f.engine->generate(finance());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProviderError);
    EXPECT_EQ(e.stage(), "provider");
    EXPECT_EQ(e.http_status(), 503);
  }
  Fixture g([](const CompletionRequest&) -> std::string { throw std::runtime_error("boom"); });
  try {
    g.engine->generate(finance());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProviderError);
  }
}

TEST(Engine, MalformedReplyIsGenerationMalformed) {
  for (std::string reply : {"I cannot help with that.", "```html\n\n```", "```html\n<div class=\"x\n```"}) {
    Fixture f([reply](const CompletionRequest&) { return reply; });
    try {
      f.engine->generate(finance());
      ADD_FAILURE() << reply;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kGenerationMalformed) << reply;
      EXPECT_EQ(e.stage(), "extract");
    }
  }
}

TEST(Engine, RegenerateKeepsLockedFields) {
  Fixture f;
  ConstraintSet current = finance();
  current.locks = {Field::kColors, Field::kFonts};
  ConstraintSet incoming = testing::table3_sets()[4];
  GeneratedDesign d = f.engine->regenerate(current, incoming);
  EXPECT_EQ(d.constraints_snapshot.colors, current.colors);
  EXPECT_EQ(d.constraints_snapshot.fonts, current.fonts);
  EXPECT_EQ(d.constraints_snapshot.industry, "News");
  const std::string& text = f.provider->requests()[0].user_text;
  EXPECT_NE(text.find("- Colors: #2C3E50, #18BC9C, #ECF0F1"), std::string::npos);
  EXPECT_NE(text.find("- Industry: News"), std::string::npos);
}

TEST(Engine, EditAppendsAndKeepsPredecessors) {
  Fixture f([](const CompletionRequest& r) {
    if (r.user_text.find("original design") != std::string::npos) {
      return fenced("<!DOCTYPE html><html><body><nav class=\"small\">Menu</nav></body></html>");
    }
    return fenced(kPage);
  });
  VersionChain chain = start_chain(f.engine->generate(finance()));
  VersionChain before = chain;
  ModificationRequest req{"html:nth-of-type(1)>body:nth-of-type(1)>nav:nth-of-type(1)", {PresetOp::kResizeSmaller}, ""};
  VersionChain edited = f.engine->regenerate_with_edit(chain, req, "edit");
  ASSERT_EQ(edited.versions.size(), 2u);
  EXPECT_EQ(edited.current_index, 1u);
  EXPECT_EQ(edited.versions[0].html_document, before.versions[0].html_document);
  EXPECT_EQ(edited.versions[0].id, before.versions[0].id);
  EXPECT_NE(edited.current().html_document, kPage);
  EXPECT_EQ(edited.current().slot_id, chain.slot_id);
  EXPECT_EQ(edited.current().edit, req);
  EXPECT_EQ(chain.versions.size(), 1u);
  auto reqs = f.provider->requests();
  EXPECT_DOUBLE_EQ(reqs.back().temperature, 0.2);
  EXPECT_TRUE(reqs.back().images.empty());
  EXPECT_EQ(reqs.back().user_text, testing::read_file(testing::source_dir() / "golden" / "edit_prompt_resize.txt"));
  EXPECT_EQ(f.engine->rebuild_prompt(edited, 1).fingerprint, edited.versions[1].prompt_fingerprint);
  EXPECT_EQ(f.engine->rebuild_prompt(edited, 0).fingerprint, edited.versions[0].prompt_fingerprint);
  EXPECT_THROW(f.engine->rebuild_prompt(edited.versions[1]), Error);
  EXPECT_THROW(f.engine->rebuild_prompt(edited, 2), Error);

  // Editing an earlier version branches off it but still appends.
  VersionChain back = navigate(edited, 0);
  VersionChain again = f.engine->regenerate_with_edit(back, req);
  ASSERT_EQ(again.versions.size(), 3u);
  EXPECT_EQ(again.current_index, 2u);
  EXPECT_EQ(f.provider->requests().back().user_text.find("class=\"small\""), std::string::npos);
}

TEST(Engine, InvalidEditRejected) {
  Fixture f;
  VersionChain chain = start_chain(f.engine->generate(finance()));
  EXPECT_THROW(f.engine->regenerate_with_edit(chain, ModificationRequest{"body", {}, ""}), Error);
  EXPECT_EQ(f.provider->requests().size(), 1u);
}

TEST(Engine, NavigateBounds) {
  Fixture f;
  VersionChain chain = start_chain(f.engine->generate(finance()));
  EXPECT_EQ(navigate(chain, 0).current_index, 0u);
  try {
    navigate(chain, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(Engine, DuplicateSharesNothing) {
  Fixture f;
  VersionChain chain = start_chain(f.engine->generate(finance()));
  chain = f.engine->regenerate_with_edit(chain, ModificationRequest{"body", {}, "x"});
  VersionChain copy = f.engine->duplicate(chain);
  EXPECT_NE(copy.slot_id, chain.slot_id);
  ASSERT_EQ(copy.versions.size(), 2u);
  EXPECT_EQ(copy.current_index, chain.current_index);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NE(copy.versions[i].id, chain.versions[i].id);
    EXPECT_EQ(copy.versions[i].slot_id, copy.slot_id);
    EXPECT_EQ(copy.versions[i].html_document, chain.versions[i].html_document);
  }
  VersionChain edited_copy = f.engine->regenerate_with_edit(copy, ModificationRequest{"body", {}, "y"});
  EXPECT_EQ(chain.versions.size(), 2u);
  EXPECT_EQ(edited_copy.versions.size(), 3u);
}

TEST(Engine, EvaluateUsesSnapshot) {
  Fixture f;
  GeneratedDesign d = f.engine->generate(finance());
  AdherenceReport r = f.engine->evaluate(d);
  EXPECT_EQ(r.design_id, d.id);
  EXPECT_EQ(r.score(ConstraintClass::kColors).total, 3u);
  EXPECT_EQ(r.score(ConstraintClass::kColors).correct, 0u);
  EXPECT_FALSE(r.evaluated_at.empty());
}

TEST(Engine, SpecificationSheet) {
  Fixture f;
  GeneratedDesign d = f.engine->generate(finance());
  auto sheet = design_specifications(d, f.engine->prompts());
  ASSERT_GE(sheet.size(), 7u);
  EXPECT_EQ(sheet[0], (std::pair<std::string, std::string>{"Industry", "Finance"}));
  auto colors = std::find_if(sheet.begin(), sheet.end(), [](auto& p) { return p.first == "Colors"; });
  ASSERT_NE(colors, sheet.end());
  EXPECT_EQ(colors->second, "#2C3E50, #18BC9C, #ECF0F1");
}

TEST(SlotLocks, SerializesSameSlotOnly) {
  SlotWriterLocks locks;
  std::atomic<int> inside{0};
  std::atomic<int> max_inside{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      auto lock = locks.acquire("slot-a");
      int now = ++inside;
      max_inside = std::max(max_inside.load(), now);
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
      --inside;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(max_inside.load(), 1);
  auto a = locks.acquire("slot-a");
  auto b = locks.acquire("slot-b");
  EXPECT_TRUE(a.owns_lock());
  EXPECT_TRUE(b.owns_lock());
}

TEST(Engine, DataUrl) {
  Bytes b = {'a', 'b', 'c'};
  EXPECT_EQ(data_url("image/png", b), "data:image/png;base64,YWJj");
}

}  // namespace
}  // namespace uiforge
