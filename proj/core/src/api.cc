#include "uiforge/api.h"

#include <httplib.h>

#include <atomic>

#include "codec.h"
#include "settings_json.h"
#include "uiforge/settings.h"

namespace uiforge {
namespace {

using detail::json;
using httplib::Request;
using httplib::Response;

constexpr const char* kJson = "application/json";

struct Mapping {
  int status;
  const char* code;
};

Mapping mapping_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidationFailed:
      return {422, "validation-failed"};
    case ErrorCode::kParseError:
      return {400, "validation-failed"};
    case ErrorCode::kNotFound:
      return {404, "not-found"};
    case ErrorCode::kConflict:
      return {409, "conflict"};
    case ErrorCode::kUnauthorized:
      return {401, "unauthorized"};
    case ErrorCode::kForbidden:
      return {403, "unauthorized"};
    case ErrorCode::kProviderError:
      return {502, "provider-error"};
    case ErrorCode::kGenerationMalformed:
      return {502, "generation-malformed"};
    case ErrorCode::kPayloadTooLarge:
      return {413, "validation-failed"};
    case ErrorCode::kIoError:
    case ErrorCode::kInternal:
      break;
  }
  return {500, "internal"};
}

void send_json(Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, json::error_handler_t::replace), kJson);
}

void send_error(Response& res, const ApiError& e) {
  res.status = e.http_status;
  res.set_content(error_body(e), kJson);
}

json parse_body(const Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("request body is not JSON: ") + e.what()).with_offset(e.byte);
  }
}

std::size_t index_param(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw Error(ErrorCode::kNotFound, "version '" + text + "' does not exist");
  }
  return static_cast<std::size_t>(v);
}

std::optional<std::size_t> optional_version(const Request& req, const json& body) {
  if (req.has_param("version")) return index_param(req.get_param_value("version"));
  if (body.is_object() && body.contains("version") && !body["version"].is_null()) {
    if (!body["version"].is_number_unsigned()) {
      throw Error(ErrorCode::kParseError, "field 'version' must be a non-negative integer");
    }
    return body["version"].get<std::size_t>();
  }
  return std::nullopt;
}

json version_summary(const GeneratedDesign& d, std::size_t index) {
  return {{"index", index},
          {"id", d.id},
          {"created_at", d.created_at},
          {"prompt_fingerprint", d.prompt_fingerprint},
          {"edit", d.edit ? detail::to_json(*d.edit) : json(nullptr)}};
}

json descriptor(const VersionChain& chain) {
  return {{"slot_id", chain.slot_id},
          {"index", chain.current_index},
          {"current_index", chain.current_index},
          {"version_count", chain.versions.size()},
          {"design", detail::to_json(chain.current())}};
}

}  // namespace

ApiError map_error(std::exception_ptr error) {
  ApiError out;
  try {
    if (error) std::rethrow_exception(error);
    out.code = "internal";
    out.message = "unknown failure";
  } catch (const Error& e) {
    Mapping m = mapping_for(e.code());
    out.http_status = m.status;
    out.code = m.code;
    out.message = m.status == 500 && e.code() == ErrorCode::kInternal ? "internal error" : e.what();
    json details = json::object();
    details["reason"] = std::string(to_string(e.code()));
    if (!e.issues().empty()) {
      json issues = json::array();
      for (const auto& issue : e.issues()) issues.push_back(detail::to_json(issue));
      details["issues"] = issues;
    }
    if (e.offset()) details["offset"] = *e.offset();
    if (!e.stage().empty()) details["stage"] = e.stage();
    if (e.http_status()) details["upstream_status"] = *e.http_status();
    out.details_json = details.dump(-1, ' ', false, json::error_handler_t::replace);
  } catch (const json::exception& e) {
    out.http_status = 400;
    out.code = "validation-failed";
    out.message = std::string("malformed request body: ") + e.what();
  } catch (const std::exception&) {
    out.http_status = 500;
    out.code = "internal";
    out.message = "internal error";
  } catch (...) {
    out.http_status = 500;
    out.code = "internal";
    out.message = "internal error";
  }
  return out;
}

std::string error_body(const ApiError& error) {
  json details = json::object();
  try {
    details = json::parse(error.details_json);
  } catch (const json::exception&) {
  }
  json body = {{"error", {{"code", error.code}, {"message", error.message}, {"details", details}}}};
  return body.dump(-1, ' ', false, json::error_handler_t::replace);
}

struct ApiService::Impl {
  ServiceDeps deps;
  ServiceConfig config;
  httplib::Server server;
  std::unique_ptr<GenerationEngine> engine;
  SlotWriterLocks slot_locks;
  std::string base_url;
  std::string host;
  int port = 0;

  WorkspaceStore& store() { return *deps.store; }

  std::string user_of(const Request& req) {
    std::string header = req.get_header_value("Authorization");
    constexpr std::string_view kBearer = "Bearer ";
    if (header.size() <= kBearer.size() || header.compare(0, kBearer.size(), kBearer) != 0) {
      throw Error(ErrorCode::kUnauthorized, "missing bearer token");
    }
    return store().authenticate(header.substr(kBearer.size())).id;
  }

  using Handler = std::function<void(const Request&, Response&)>;
  Handler guarded(Handler fn) {
    return [fn = std::move(fn)](const Request& req, Response& res) {
      try {
        fn(req, res);
      } catch (...) {
        send_error(res, map_error(std::current_exception()));
      }
    };
  }
  // Same, with the caller's user id resolved first.
  using UserHandler = std::function<void(const std::string&, const Request&, Response&)>;
  Handler authed(UserHandler fn) {
    return guarded([this, fn = std::move(fn)](const Request& req, Response& res) { fn(user_of(req), req, res); });
  }

  VersionChain generate(const std::string& user, const json& body) {
    if (!body.is_object()) throw Error(ErrorCode::kParseError, "generate body must be a settings document");
    json settings = body;
    GenerateOptions options;
    if (auto it = settings.find("seed"); it != settings.end()) {
      if (!it->is_number_unsigned()) throw Error(ErrorCode::kParseError, "field 'seed' must be a non-negative integer");
      options.seed = it->get<std::uint64_t>();
      settings.erase("seed");
    }
    std::optional<std::string> base_slot;
    if (auto it = settings.find("base_slot_id"); it != settings.end()) {
      if (!it->is_string()) throw Error(ErrorCode::kParseError, "field 'base_slot_id' must be a string");
      base_slot = it->get<std::string>();
      settings.erase("base_slot_id");
    }
    ConstraintSet cs = detail::settings_from_json(settings);
    GeneratedDesign design;
    if (base_slot) {
      VersionChain base = store().load_chain(user, *base_slot);
      design = engine->regenerate(base.current().constraints_snapshot, cs, options);
    } else {
      design = engine->generate(cs, options);
    }
    VersionChain chain = start_chain(std::move(design));
    store().save_chain(user, chain);
    return chain;
  }

  void routes() {

    server.Post("/auth/login", guarded([this](const Request& req, Response& res) {
      json body = parse_body(req);
      SessionToken s = store().login(detail::require_string(body, "login"), detail::require_string(body, "password"));
      send_json(res, 200, {{"token", s.token}, {"user_id", s.user_id}, {"expires_at", s.expires_at}});
    }));
    server.Post("/auth/logout", authed([this](const std::string&, const Request& req, Response& res) {
      store().logout(req.get_header_value("Authorization").substr(7));
      res.status = 204;
    }));

    server.Get("/catalog/options", authed([this](const std::string&, const Request&, Response& res) {
      res.status = 200;
      res.set_content(options_to_json(deps.options), kJson);
    }));

    server.Post("/designs:generate", authed([this](const std::string& user, const Request& req, Response& res) {
      send_json(res, 200, descriptor(generate(user, parse_body(req))));
    }));
    server.Get("/designs", authed([this](const std::string& user, const Request&, Response& res) {
      send_json(res, 200, {{"slots", store().list_slots(user)}});
    }));
    server.Post(R"(/designs/([^/]+)/edit)", authed([this](const std::string& user, const Request& req, Response& res) {
      std::string slot = req.matches[1];
      ModificationRequest mod = detail::modification_from_json(parse_body(req));
      auto lock = slot_locks.acquire(slot);
      VersionChain chain = store().load_chain(user, slot);
      VersionChain next = engine->regenerate_with_edit(chain, mod);
      store().save_chain(user, next);
      send_json(res, 200, descriptor(next));
    }));
    server.Get(R"(/designs/([^/]+)/versions)", authed([this](const std::string& user, const Request& req, Response& res) {
      VersionChain chain = store().load_chain(user, req.matches[1]);
      json versions = json::array();
      for (std::size_t i = 0; i < chain.versions.size(); ++i) versions.push_back(version_summary(chain.versions[i], i));
      send_json(res, 200, {{"slot_id", chain.slot_id}, {"current_index", chain.current_index}, {"versions", versions}});
    }));
    server.Get(R"(/designs/([^/]+)/versions/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      VersionChain chain = store().load_chain(user, req.matches[1]);
      std::size_t i = index_param(req.matches[2]);
      chain = navigate(std::move(chain), i);
      json body = detail::to_json(chain.current());
      body["index"] = i;
      send_json(res, 200, body);
    }));
    server.Get(R"(/designs/([^/]+)/versions/([^/]+)/download)", authed([this](const std::string& user, const Request& req, Response& res) {
      std::string slot = req.matches[1];
      VersionChain chain = navigate(store().load_chain(user, slot), index_param(req.matches[2]));
      res.status = 200;
      res.set_header("Content-Disposition", "attachment; filename=\"design-" + slot + "-v" +
                                                std::string(req.matches[2]) + ".html\"");
      res.set_content(chain.current().html_document, "text/html; charset=utf-8");
    }));
    server.Put(R"(/designs/([^/]+)/current)", authed([this](const std::string& user, const Request& req, Response& res) {
      std::string slot = req.matches[1];
      json body = parse_body(req);
      if (!body.contains("index") || !body["index"].is_number_unsigned()) {
        throw Error(ErrorCode::kParseError, "field 'index' must be a non-negative integer");
      }
      auto lock = slot_locks.acquire(slot);
      VersionChain chain = navigate(store().load_chain(user, slot), body["index"].get<std::size_t>());
      store().save_chain(user, chain);
      send_json(res, 200, descriptor(chain));
    }));
    server.Post(R"(/designs/([^/]+)/duplicate)", authed([this](const std::string& user, const Request& req, Response& res) {
      VersionChain copy = engine->duplicate(store().load_chain(user, req.matches[1]));
      store().save_chain(user, copy);
      send_json(res, 201, descriptor(copy));
    }));
    server.Get(R"(/designs/([^/]+)/spec-sheet)", authed([this](const std::string& user, const Request& req, Response& res) {
      VersionChain chain = store().load_chain(user, req.matches[1]);
      if (auto v = optional_version(req, json::object())) chain = navigate(std::move(chain), *v);
      json rows = json::array();
      for (const auto& [label, value] : design_specifications(chain.current(), engine->prompts())) {
        rows.push_back({{"label", label}, {"value", value}});
      }
      send_json(res, 200, {{"slot_id", chain.slot_id}, {"index", chain.current_index}, {"specifications", rows}});
    }));
    server.Post(R"(/designs/([^/]+)/adherence)", authed([this](const std::string& user, const Request& req, Response& res) {
      VersionChain chain = store().load_chain(user, req.matches[1]);
      if (auto v = optional_version(req, parse_body(req))) chain = navigate(std::move(chain), *v);
      send_json(res, 200, detail::to_json(engine->evaluate(chain.current())));
    }));

    server.Post("/canvases", authed([this](const std::string& user, const Request& req, Response& res) {
      Canvas c = detail::canvas_from_json(parse_body(req));
      c.id.clear();
      send_json(res, 201, detail::to_json(store().save_canvas(user, std::move(c))));
    }));
    server.Get("/canvases", authed([this](const std::string& user, const Request&, Response& res) {
      json list = json::array();
      for (const auto& s : store().list_canvases(user)) list.push_back(detail::to_json(s));
      send_json(res, 200, {{"canvases", list}});
    }));
    server.Get(R"(/canvases/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      send_json(res, 200, detail::to_json(store().load_canvas(user, req.matches[1])));
    }));
    server.Put(R"(/canvases/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      Canvas c = detail::canvas_from_json(parse_body(req));
      c.id = req.matches[1];
      send_json(res, 200, detail::to_json(store().save_canvas(user, std::move(c))));
    }));
    server.Delete(R"(/canvases/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      store().delete_canvas(user, req.matches[1]);
      res.status = 204;
    }));

    server.Post("/folders", authed([this](const std::string& user, const Request& req, Response& res) {
      json body = parse_body(req);
      send_json(res, 201, detail::to_json(store().create_folder(user, detail::require_string(body, "name"))));
    }));
    server.Get("/folders", authed([this](const std::string& user, const Request&, Response& res) {
      json list = json::array();
      for (const auto& f : store().list_folders(user)) list.push_back(detail::to_json(f));
      send_json(res, 200, {{"folders", list}});
    }));
    server.Get(R"(/folders/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      send_json(res, 200, detail::to_json(store().load_folder(user, req.matches[1])));
    }));
    server.Delete(R"(/folders/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      store().delete_folder(user, req.matches[1]);
      res.status = 204;
    }));
    server.Post(R"(/folders/([^/]+)/entries)", authed([this](const std::string& user, const Request& req, Response& res) {
      json body = parse_body(req);
      VersionChain chain = store().load_chain(user, detail::require_string(body, "slot_id"));
      if (auto v = optional_version(req, body)) chain = navigate(std::move(chain), *v);
      send_json(res, 201, detail::to_json(store().save_to_favorites(user, req.matches[1], chain.current())));
    }));
    server.Delete(R"(/folders/([^/]+)/entries/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      store().delete_favorite(user, req.matches[1], req.matches[2]);
      res.status = 204;
    }));

    server.Post("/assets", authed([this](const std::string& user, const Request& req, Response& res) {
      if (!req.is_multipart_form_data() || !req.has_file("file")) {
        throw Error(ErrorCode::kValidationFailed, "upload must be multipart/form-data with a 'file' part");
      }
      AssetKind kind = AssetKind::kLogo;
      if (req.has_file("kind")) {
        std::string name = req.get_file_value("kind").content;
        auto parsed = parse_asset_kind(name);
        if (!parsed) {
          throw Error(ErrorCode::kValidationFailed, "unknown asset kind",
                      {{"kind", IssueCode::kUnknownEnumValue, "unknown asset kind '" + name + "'"}});
        }
        kind = *parsed;
      }
      const std::string& content = req.get_file_value("file").content;
      StoredAsset asset = store().store_asset(user, Bytes(content.begin(), content.end()), kind);
      json body = detail::to_json(asset);
      body["url"] = url_for(asset.id);
      send_json(res, 201, body);
    }));
    server.Get("/assets", authed([this](const std::string& user, const Request&, Response& res) {
      json list = json::array();
      for (const auto& a : store().list_assets(user)) {
        json item = detail::to_json(a);
        item["url"] = url_for(a.id);
        list.push_back(item);
      }
      send_json(res, 200, {{"assets", list}});
    }));
    // Asset ids are unguessable capability URLs so that generated documents
    // can load them without credentials.
    server.Get(R"(/assets/([0-9a-f]+))", guarded([this](const Request& req, Response& res) {
      auto asset = store().read_asset(req.matches[1]);
      if (!asset) throw Error(ErrorCode::kNotFound, "asset not found");
      res.status = 200;
      res.set_header("Cache-Control", "private, max-age=86400");
      res.set_content(std::string(asset->second.begin(), asset->second.end()), asset->first.mime);
    }));
    server.Delete(R"(/assets/([^/]+))", authed([this](const std::string& user, const Request& req, Response& res) {
      store().delete_asset(user, req.matches[1]);
      res.status = 204;
    }));

    server.Post("/settings/import", authed([](const std::string&, const Request& req, Response& res) {
      ConstraintSet cs = import_settings(req.body);
      send_json(res, 200, {{"settings", detail::settings_to_json(cs)}});
    }));
    server.Post("/settings/export", authed([](const std::string&, const Request& req, Response& res) {
      json body = parse_body(req);
      if (body.is_object() && body.contains("settings")) body = body["settings"];
      if (body.is_object() && !body.contains("schema_version")) body["schema_version"] = kSettingsSchemaVersion;
      std::string text = export_settings(detail::settings_from_json(body));
      res.status = 200;
      res.set_header("Content-Disposition", "attachment; filename=\"settings.json\"");
      res.set_content(text, kJson);
    }));

    server.set_error_handler([](const Request&, Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      ApiError e;
      e.http_status = res.status;
      switch (res.status) {
        case 404:
          e.code = "not-found";
          e.message = "no such route";
          break;
        case 413:
          e.code = "validation-failed";
          e.message = "request body too large";
          break;
        case 400:
          e.code = "validation-failed";
          e.message = "bad request";
          break;
        default:
          e.code = res.status >= 500 ? "internal" : "validation-failed";
          e.message = "request failed";
      }
      send_error(res, e);
      return httplib::Server::HandlerResponse::Handled;
    });
    server.set_exception_handler([](const Request&, Response& res, std::exception_ptr ep) {
      send_error(res, map_error(ep));
    });
    server.set_payload_max_length(config.max_request_bytes);
  }

  std::string url_for(std::string_view asset_id) const { return base_url + "/assets/" + std::string(asset_id); }
};

ApiService::ApiService(ServiceDeps deps, ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  if (!deps.store) throw Error(ErrorCode::kInternal, "api service needs a workspace store");
  if (!deps.provider) throw Error(ErrorCode::kInternal, "api service needs a provider");
  impl_->deps = std::move(deps);
  impl_->config = std::move(config);
  impl_->base_url = impl_->config.public_base_url;
  Impl* impl = impl_.get();
  EngineConfig ec = impl->deps.engine;
  ec.load_asset = [impl](std::string_view id) -> std::optional<AssetBlob> {
    auto asset = impl->store().read_asset(std::string(id));
    if (!asset) return std::nullopt;
    return AssetBlob{asset->first.mime, std::move(asset->second)};
  };
  PromptBuilder prompts(impl->deps.themes, [impl](std::string_view id) { return impl->url_for(id); });
  impl->engine = std::make_unique<GenerationEngine>(impl->deps.catalog, std::move(prompts),
                                                    impl->deps.provider, std::move(ec));
  impl->routes();
}

ApiService::~ApiService() { stop(); }

int ApiService::bind(const std::string& host, int port) {
  bool ok;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(host);
    ok = port > 0;
  } else {
    ok = impl_->server.bind_to_port(host, port);
  }
  if (!ok) throw Error(ErrorCode::kIoError, "cannot listen on " + host + ":" + std::to_string(port));
  impl_->host = host;
  impl_->port = port;
  if (impl_->base_url.empty()) {
    std::string h = host == "0.0.0.0" || host.empty() ? "127.0.0.1" : host;
    impl_->base_url = "http://" + h + ":" + std::to_string(port);
  }
  return port;
}

void ApiService::run() { impl_->server.listen_after_bind(); }

void ApiService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void ApiService::wait_until_ready() const { impl_->server.wait_until_ready(); }

std::string ApiService::asset_url(std::string_view asset_id) const { return impl_->url_for(asset_id); }

const GenerationEngine& ApiService::engine() const { return *impl_->engine; }

}  // namespace uiforge
