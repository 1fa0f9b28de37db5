#include <benchmark/benchmark.h>

#include <memory>

#include "uiforge/engine.h"
#include "uiforge/suite.h"

namespace {

using namespace uiforge;

const std::vector<SuiteBrief>& briefs() {
  static const auto b = load_briefs(std::string(UIFORGE_BENCH_DATA_DIR) + "/briefs/table3.json");
  return b;
}

PromptBuilder builder() {
  return PromptBuilder(ThemeLibrary::load(std::string(UIFORGE_BENCH_DATA_DIR) + "/themes"),
                       [](std::string_view id) { return "https://assets.example.test/assets/" + std::string(id); });
}

GenerationEngine& engine() {
  static GenerationEngine e(std::make_shared<const Catalog>(), builder(), std::make_shared<StubProvider>());
  return e;
}

void BM_BuildUserPrompt(benchmark::State& state) {
  PromptBuilder b = builder();
  ConstraintSet cs = briefs()[0].constraints;
  cs.design_theme = DesignTheme::kMaterialDesign;
  for (auto _ : state) benchmark::DoNotOptimize(b.build_user_prompt(cs, nullptr));
}
BENCHMARK(BM_BuildUserPrompt);

void BM_GenerateWithStub(benchmark::State& state) {
  const ConstraintSet& cs = briefs()[static_cast<std::size_t>(state.range(0))].constraints;
  for (auto _ : state) benchmark::DoNotOptimize(engine().generate(cs));
}
BENCHMARK(BM_GenerateWithStub)->DenseRange(0, 4);

void BM_Evaluate(benchmark::State& state) {
  GeneratedDesign d = engine().generate(briefs()[0].constraints);
  for (auto _ : state) benchmark::DoNotOptimize(engine().evaluate(d));
}
BENCHMARK(BM_Evaluate);

void BM_ExtractHtml(benchmark::State& state) {
  std::string reply = "Sure, here is the design.\n```html\n<!DOCTYPE html><html><body>" +
                      std::string(static_cast<std::size_t>(state.range(0)), 'x') + "</body></html>\n```\nEnjoy!";
  for (auto _ : state) benchmark::DoNotOptimize(extract_html(reply));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(reply.size()));
}
BENCHMARK(BM_ExtractHtml)->Range(1 << 10, 1 << 20);

void BM_Suite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_adherence_suite(briefs(), engine()));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
