#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "uiforge/api.h"
#include "uiforge/catalog.h"
#include "uiforge/engine.h"
#include "uiforge/error.h"
#include "uiforge/llm.h"
#include "uiforge/settings.h"
#include "uiforge/store.h"
#include "uiforge/suite.h"

namespace fs = std::filesystem;
using namespace uiforge;

namespace {

// Installed share dir when present, otherwise the source tree's data/.
fs::path share_dir() {
  if (const char* env = std::getenv("UIFORGE_SHARE_DIR"); env && *env) return env;
  fs::path installed = UIFORGE_DEFAULT_SHARE_DIR;
  if (fs::exists(installed / "options.json")) return installed;
  return UIFORGE_SOURCE_SHARE_DIR;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void print_error(const Error& e) {
  std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  for (const auto& issue : e.issues()) {
    std::cerr << "  " << issue.field << ": " << to_string(issue.code) << ": " << issue.message << "\n";
  }
  if (e.offset()) std::cerr << "  at byte " << *e.offset() << "\n";
}

struct ProviderFlags {
  std::string provider;
  std::string llm_config;
};

void add_provider_flags(CLI::App* cmd, ProviderFlags& flags) {
  cmd->add_option("--provider", flags.provider, "stub or http (default from UIFORGE_LLM_PROVIDER)")
      ->check(CLI::IsMember({"stub", "http"}));
  cmd->add_option("--llm-config", flags.llm_config, "JSON file with provider settings")->check(CLI::ExistingFile);
}

LlmSettings resolve_llm(const ProviderFlags& flags) {
  LlmSettings settings;
  if (!flags.llm_config.empty()) settings = llm_settings_from_file(flags.llm_config, settings);
  settings = llm_settings_from_env(settings);
  if (flags.provider == "stub") settings.kind = ProviderKind::kStub;
  if (flags.provider == "http") settings.kind = ProviderKind::kHttp;
  return settings;
}

std::shared_ptr<const Catalog> catalog_or_empty(const std::string& manifest) {
  if (manifest.empty()) return std::make_shared<const Catalog>();
  return std::make_shared<const Catalog>(load_catalog(manifest));
}

// "0,0,0;2,2,1" -> {{0,0,0},{2,2,1}}
std::vector<std::vector<std::size_t>> parse_schedule(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream sets(text);
  std::string set;
  while (std::getline(sets, set, ';')) {
    std::vector<std::size_t> row;
    std::stringstream items(set);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        row.push_back(std::stoul(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad font schedule entry '" + item + "'");
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

int run_serve(const std::string& data_dir, const std::string& listen, const ProviderFlags& pf,
              const std::string& catalog, const std::string& themes, const std::string& options,
              const std::string& public_url) {
  auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kParseError, "--listen must be host:port");
  std::string host = listen.substr(0, colon);
  int port = std::stoi(listen.substr(colon + 1));

  // Signals are taken by a dedicated thread so stop() runs outside a handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  auto store = WorkspaceStore::open(data_dir);
  LlmSettings llm = resolve_llm(pf);
  ServiceDeps deps;
  deps.store = store.get();
  deps.catalog = catalog_or_empty(catalog);
  deps.options = load_options(options);
  deps.themes = ThemeLibrary::load(themes);
  deps.provider = make_provider(llm);
  deps.engine = engine_config_from(llm);
  ServiceConfig config;
  config.public_base_url = public_url;
  ApiService service(std::move(deps), config);
  int bound = service.bind(host, port);
  std::cerr << "uiforge listening on " << host << ":" << bound << " (provider "
            << (llm.kind == ProviderKind::kHttp ? "http" : "stub") << ", catalog "
            << (catalog.empty() ? std::string("none") : catalog) << ")\n";

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    service.stop();
  });
  service.run();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uiforge: constraint-driven UI ideation service and tools"};
  app.require_subcommand(1);
  fs::path share = share_dir();

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string data_dir, listen = "127.0.0.1:8080", catalog_path, public_url;
  std::string themes_dir = (share / "themes").string(), options_path = (share / "options.json").string();
  ProviderFlags serve_pf;
  serve->add_option("--data-dir", data_dir, "Workspace data directory")->required();
  serve->add_option("--listen", listen, "host:port");
  serve->add_option("--catalog", catalog_path, "Reference-screen manifest CSV")->check(CLI::ExistingFile);
  serve->add_option("--themes", themes_dir, "Theme data directory")->check(CLI::ExistingDirectory);
  serve->add_option("--options", options_path, "Dropdown options JSON")->check(CLI::ExistingFile);
  serve->add_option("--public-url", public_url, "Origin used in asset URLs");
  add_provider_flags(serve, serve_pf);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Reference-screen catalog administration");
  catalog->require_subcommand(1);
  auto* ingest = catalog->add_subcommand("ingest", "Add screens to a catalog");
  std::string manifest, industry, screen_type, device_name = "Desktop", source_label;
  std::vector<std::string> images;
  std::string ingest_options = options_path;
  ingest->add_option("--manifest", manifest, "Manifest CSV (created if missing)")->required();
  ingest->add_option("--options", ingest_options, "Dropdown options JSON")->check(CLI::ExistingFile);
  ingest->add_option("--industry", industry)->required();
  ingest->add_option("--screen-type", screen_type)->required();
  ingest->add_option("--device", device_name)->check(CLI::IsMember({"Desktop", "Mobile", "Tablet"}));
  ingest->add_option("--source-label", source_label);
  ingest->add_option("images", images, "PNG or JPEG files")->required()->check(CLI::ExistingFile);
  auto* verify = catalog->add_subcommand("verify", "Check manifest, images and grayscale invariant");
  std::string verify_manifest;
  verify->add_option("--manifest", verify_manifest)->required()->check(CLI::ExistingFile);

  // adhere
  auto* adhere = app.add_subcommand("adhere", "Constraint-adherence harness");
  adhere->require_subcommand(1);
  auto* adhere_run = adhere->add_subcommand("run", "Generate and score every brief");
  std::string briefs_path = (share / "briefs" / "table3.json").string(), csv_path, gallery_dir, schedule;
  std::string adhere_catalog, adhere_themes = themes_dir, asset_base = "http://127.0.0.1:8080/assets";
  std::optional<std::size_t> variations;
  std::optional<std::uint64_t> seed;
  std::size_t concurrency = 4;
  ProviderFlags adhere_pf;
  adhere_run->add_option("--briefs", briefs_path, "Briefs JSON")->check(CLI::ExistingFile);
  adhere_run->add_option("--variations", variations, "Designs per brief (overrides the file)");
  adhere_run->add_option("--catalog", adhere_catalog, "Reference-screen manifest CSV")->check(CLI::ExistingFile);
  adhere_run->add_option("--themes", adhere_themes)->check(CLI::ExistingDirectory);
  adhere_run->add_option("--csv", csv_path, "Write the per-set table as CSV");
  adhere_run->add_option("--gallery", gallery_dir, "Write an HTML gallery of the designs");
  adhere_run->add_option("--stub-font-schedule", schedule,
                         "Fonts the stub drops per cell, e.g. \"0,0,0,0,0;2,2,2,2,1\"");
  adhere_run->add_option("--seed", seed, "Reference-screen draw seed");
  adhere_run->add_option("--concurrency", concurrency)->check(CLI::Range(1, 64));
  adhere_run->add_option("--asset-base-url", asset_base, "Prefix for logo URLs in prompts");
  add_provider_flags(adhere_run, adhere_pf);

  // user
  auto* user = app.add_subcommand("user", "Account administration");
  user->require_subcommand(1);
  auto* user_add = user->add_subcommand("add", "Create an account; password from UIFORGE_PASSWORD or stdin");
  std::string user_dir, login;
  user_add->add_option("--data-dir", user_dir)->required();
  user_add->add_option("--login", login)->required();

  // settings
  auto* settings = app.add_subcommand("settings", "Settings documents");
  settings->require_subcommand(1);
  auto* validate_cmd = settings->add_subcommand("validate", "Check a settings file");
  std::string settings_file;
  validate_cmd->add_option("file", settings_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      return run_serve(data_dir, listen, serve_pf, catalog_path, themes_dir, options_path, public_url);
    }
    if (*ingest) {
      OptionCatalog opts = load_options(ingest_options);
      Device device = *parse_device(device_name);
      for (const auto& image : images) {
        std::string bytes = read_text(image);
        ReferenceScreen s = ingest_screen(manifest, opts, Bytes(bytes.begin(), bytes.end()), industry, screen_type,
                                          device, source_label);
        std::cout << s.id << "\t" << s.image_path << "\n";
      }
      return 0;
    }
    if (*verify) {
      auto problems = verify_catalog(verify_manifest);
      for (const auto& p : problems) std::cout << p << "\n";
      if (problems.empty()) std::cout << "ok\n";
      return problems.empty() ? 0 : 1;
    }
    if (*adhere_run) {
      std::vector<SuiteBrief> briefs = load_briefs(briefs_path);
      if (variations) {
        for (auto& b : briefs) b.variations = *variations;
      }
      LlmSettings llm = resolve_llm(adhere_pf);
      StubOptions stub;
      if (!schedule.empty()) stub.drop_fonts = font_drop_schedule(parse_schedule(schedule));
      std::shared_ptr<LlmProvider> provider = make_provider(llm, stub);
      EngineConfig ec = engine_config_from(llm);
      // Offline runs have no asset store; any logo id resolves to a placeholder image.
      Bytes placeholder = encode_png(solid_image(64, 64, 0x33, 0x66, 0x99));
      ec.load_asset = [placeholder](std::string_view) { return AssetBlob{"image/png", placeholder}; };
      PromptBuilder prompts(ThemeLibrary::load(adhere_themes), [asset_base](std::string_view id) {
        return asset_base + "/" + std::string(id);
      });
      GenerationEngine engine(catalog_or_empty(adhere_catalog), std::move(prompts), provider, std::move(ec));
      SuiteOptions so;
      so.concurrency = concurrency;
      so.base_seed = seed;
      SuiteReport report = run_adherence_suite(briefs, engine, so);
      std::cout << suite_table(report);
      for (const auto& cell : report.cells) {
        if (!cell.error.empty()) {
          std::cerr << "set " << cell.set_index + 1 << " variation " << cell.variation + 1 << ": " << cell.error << "\n";
        }
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error(ErrorCode::kIoError, "cannot write " + csv_path);
        out << suite_csv(report);
      }
      if (!gallery_dir.empty()) write_gallery(report, gallery_dir);
      return 0;
    }
    if (*user_add) {
      std::string password;
      if (const char* env = std::getenv("UIFORGE_PASSWORD"); env && *env) {
        password = env;
      } else {
        std::getline(std::cin, password);
      }
      auto store = WorkspaceStore::open(user_dir);
      UserAccount account = store->add_user(login, password);
      std::cout << account.id << "\n";
      return 0;
    }
    if (*validate_cmd) {
      ConstraintSet cs = import_settings(read_text(settings_file));
      std::cout << "ok: " << settings_file << " (" << to_string(cs.device) << ", " << cs.colors.size()
                << " colors, " << cs.fonts.size() << " fonts)\n";
      return 0;
    }
  } catch (const Error& e) {
    print_error(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
