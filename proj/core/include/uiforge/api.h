#pragma once

#include <exception>
#include <memory>
#include <string>

#include "uiforge/catalog.h"
#include "uiforge/engine.h"
#include "uiforge/llm.h"
#include "uiforge/prompt.h"
#include "uiforge/store.h"

namespace uiforge {

struct ApiError {
  int http_status = 500;
  std::string code;  // validation-failed, not-found, provider-error, ...
  std::string message;
  std::string details_json = "{}";
};

// Total mapping: any exception yields a status and one machine code;
// anything unrecognized becomes 500 "internal".
ApiError map_error(std::exception_ptr error);

// {"error": {"code": ..., "message": ..., "details": {...}}}
std::string error_body(const ApiError& error);

struct ServiceConfig {
  // Origin used in asset URLs. Defaults to http://<bound host>:<port>.
  std::string public_base_url;
  std::size_t max_request_bytes = 8 * 1024 * 1024;
};

struct ServiceDeps {
  WorkspaceStore* store = nullptr;
  std::shared_ptr<const Catalog> catalog;
  OptionCatalog options;
  ThemeLibrary themes;
  std::shared_ptr<LlmProvider> provider;
  EngineConfig engine;  // load_asset is wired to the store
};

class ApiService {
 public:
  ApiService(ServiceDeps deps, ServiceConfig config = {});
  ~ApiService();
  ApiService(const ApiService&) = delete;
  ApiService& operator=(const ApiService&) = delete;

  // Binds the listening socket; port 0 picks a free one. Returns the port.
  int bind(const std::string& host, int port);
  // Serves until stop(). Call after bind.
  void run();
  void stop();
  // Blocks until the server accepts connections.
  void wait_until_ready() const;

  std::string asset_url(std::string_view asset_id) const;
  const GenerationEngine& engine() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace uiforge
