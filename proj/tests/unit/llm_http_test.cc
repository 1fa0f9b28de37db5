#include <gtest/gtest.h>

#include <httplib.h>

#include <nlohmann/json.hpp>
#include <thread>

#include "uiforge/error.h"
#include "uiforge/llm.h"

namespace uiforge {
namespace {

using nlohmann::json;

// Local chat-completion double bound to an ephemeral port.
class FakeService {
 public:
  explicit FakeService(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
    server_.Post("/v1/chat/completions", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeService() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions"; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

CompletionRequest sample_request() {
  CompletionRequest req;
  req.system_text = "sys";
  req.user_text = "user";
  req.model_id = "gpt-4o";
  req.images.push_back({"ref", "image/png", {1, 2, 3}});
  req.tag = "secret-tag";
  return req;
}

HttpProviderConfig config_for(const FakeService& svc) {
  HttpProviderConfig c;
  c.endpoint = svc.endpoint();
  c.api_key = "sk-local";
  c.timeout = std::chrono::seconds(1);
  return c;
}

TEST(HttpProvider, RequestBodyShape) {
  json body = json::parse(HttpProvider::request_body(sample_request()));
  EXPECT_EQ(body["model"], "gpt-4o");
  ASSERT_EQ(body["messages"].size(), 2u);
  EXPECT_EQ(body["messages"][0]["role"], "system");
  EXPECT_EQ(body["messages"][0]["content"], "sys");
  const auto& parts = body["messages"][1]["content"];
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0]["type"], "text");
  EXPECT_EQ(parts[0]["text"], "user");
  EXPECT_EQ(parts[1]["image_url"]["url"], "data:image/png;base64,AQID");
  EXPECT_EQ(body["max_tokens"], 8192);
  EXPECT_EQ(HttpProvider::request_body(sample_request()).find("secret-tag"), std::string::npos);
}

TEST(HttpProvider, Success) {
  std::string auth;
  FakeService svc([&](const httplib::Request& req, httplib::Response& res) {
    auth = req.get_header_value("Authorization");
    res.set_content(R"({"choices":[{"message":{"role":"assistant","content":"```html\n<html></html>\n```"}}]})",
                    "application/json");
  });
  HttpProvider p(config_for(svc));
  CompletionResult r = p.complete(sample_request());
  EXPECT_EQ(r.raw_text, "```html\n<html></html>\n```");
  EXPECT_EQ(r.provider_label, "http");
  EXPECT_EQ(auth, "Bearer sk-local");
}

TEST(HttpProvider, ContentPartArrays) {
  FakeService svc([](const httplib::Request&, httplib::Response& res) {
    res.set_content(
        R"({"choices":[{"message":{"content":[{"type":"text","text":"a"},{"type":"other"},{"type":"text","text":"b"}]}}]})",
        "application/json");
  });
  HttpProvider p(config_for(svc));
  EXPECT_EQ(p.complete(sample_request()).raw_text, "ab");
}

TEST(HttpProvider, NonSuccessStatus) {
  FakeService svc([](const httplib::Request&, httplib::Response& res) {
    res.status = 429;
    res.set_content(R"({"error":"rate limited"})", "application/json");
  });
  HttpProvider p(config_for(svc));
  try {
    p.complete(sample_request());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProviderError);
    EXPECT_EQ(e.http_status(), 429);
    EXPECT_NE(std::string(e.what()).find("rate limited"), std::string::npos);
  }
}

TEST(HttpProvider, NotAChatCompletion) {
  FakeService svc([](const httplib::Request&, httplib::Response& res) { res.set_content("{}", "application/json"); });
  HttpProvider p(config_for(svc));
  EXPECT_THROW(p.complete(sample_request()), Error);
}

TEST(HttpProvider, Timeout) {
  FakeService svc([](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(2500));
    res.set_content("{}", "application/json");
  });
  HttpProvider p(config_for(svc));
  auto t0 = std::chrono::steady_clock::now();
  try {
    p.complete(sample_request());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProviderError);
    EXPECT_NE(std::string(e.what()).find("timeout"), std::string::npos);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - t0, std::chrono::milliseconds(2400));
}

TEST(HttpProvider, MissingCredential) {
  HttpProviderConfig c;
  c.endpoint = "http://127.0.0.1:9/v1/chat/completions";
  HttpProvider p(c);
  try {
    p.complete(sample_request());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProviderError);
    EXPECT_NE(std::string(e.what()).find("credential"), std::string::npos);
  }
  EXPECT_THROW(HttpProvider(HttpProviderConfig{"not-a-url", "k"}), Error);
}

TEST(HttpProvider, ConnectionRefused) {
  HttpProviderConfig c;
  int port;
  {
    httplib::Server s;
    port = s.bind_to_any_port("127.0.0.1");
  }
  c.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
  c.api_key = "k";
  c.timeout = std::chrono::seconds(1);
  EXPECT_THROW(HttpProvider(c).complete(sample_request()), Error);
}

}  // namespace
}  // namespace uiforge
