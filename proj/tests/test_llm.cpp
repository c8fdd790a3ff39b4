#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "aphgen/defaults.hpp"
#include "aphgen/errors.hpp"
#include "aphgen/llm.hpp"

using namespace aphgen;
using json = nlohmann::json;

namespace {

// In-process OpenAI-compatible stub. Handler decides the reply per request.
class StubServer {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  explicit StubServer(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   {
                     std::lock_guard<std::mutex> lock(mutex_);
                     bodies_.push_back(req.body);
                     if (req.has_header("Authorization"))
                       auth_headers_.push_back(req.get_header_value("Authorization"));
                   }
                   handler_(req, res);
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::vector<std::string> bodies() {
    std::lock_guard<std::mutex> lock(mutex_);
    return bodies_;
  }

  std::vector<std::string> auth_headers() {
    std::lock_guard<std::mutex> lock(mutex_);
    return auth_headers_;
  }

 private:
  httplib::Server server_;
  Handler handler_;
  int port_ = 0;
  std::thread thread_;
  std::mutex mutex_;
  std::vector<std::string> bodies_;
  std::vector<std::string> auth_headers_;
};

void reply_text(httplib::Response& res, const std::string& text) {
  json reply = {{"choices", {{{"message", {{"role", "assistant"}, {"content", text}}}}}}};
  res.set_content(reply.dump(), "application/json");
}

EndpointConfig test_endpoint(const StubServer& server) {
  EndpointConfig ep;
  ep.base_url = server.base_url();
  ep.model_name = "stub-model";
  ep.timeout_s = 5.0;
  ep.backoff_ms = 1;  // keep retry tests fast
  return ep;
}

std::string pack_json_missing(const std::string& drop_severity) {
  json pack = json::object();
  for (Severity sev : kAllSeverities) {
    if (to_string(sev) == drop_severity) continue;
    json arr = json::array();
    for (int i = 1; i <= 4; ++i)
      arr.push_back({{"system", "sys " + std::to_string(i)}, {"user", "usr " + std::to_string(i)}});
    pack[to_string(sev)] = arr;
  }
  return json{{"pack", pack}}.dump();
}

}  // namespace

TEST_CASE("the default prompt pack covers 4 severities x 4 templates") {
  PromptPack pack = default_prompt_pack();
  CHECK(pack.templates.size() == 16);
  for (Severity sev : kAllSeverities)
    for (int t = 1; t <= 4; ++t) {
      const PromptTemplate& tpl = pack.find(sev, t);
      CHECK_FALSE(tpl.system_text.empty());
      CHECK_FALSE(tpl.user_text.empty());
    }
  CHECK_THROWS_AS(pack.find(Severity::Mild, 5), PackMalformed);
}

TEST_CASE("pack parsing enforces the 4x4 shape") {
  CHECK_THROWS_AS(parse_prompt_pack(pack_json_missing("severe")), PackMalformed);
  CHECK_THROWS_AS(parse_prompt_pack("not json"), PackMalformed);
  CHECK_THROWS_AS(parse_prompt_pack("[1,2]"), PackMalformed);

  // duplicate template ids
  json pack = json::object();
  for (Severity sev : kAllSeverities) {
    json arr = json::array();
    for (int i = 1; i <= 4; ++i)
      arr.push_back({{"id", 1}, {"system", "s"}, {"user", "u"}});
    pack[to_string(sev)] = arr;
  }
  CHECK_THROWS_AS(parse_prompt_pack(json{{"pack", pack}}.dump()), PackMalformed);

  // empty user text
  pack = json::object();
  for (Severity sev : kAllSeverities) {
    json arr = json::array();
    for (int i = 1; i <= 4; ++i) arr.push_back({{"system", "s"}, {"user", ""}});
    pack[to_string(sev)] = arr;
  }
  CHECK_THROWS_AS(parse_prompt_pack(json{{"pack", pack}}.dump()), PackMalformed);

  // a well-formed pack parses, ids default to array position
  PromptPack ok = parse_prompt_pack(pack_json_missing(""));
  CHECK(ok.templates.size() == 16);
  CHECK(ok.find(Severity::Moderate, 3).system_text == "sys 3");
}

TEST_CASE("request_completion round-trips text and sends the sampling payload") {
  StubServer server([](const httplib::Request&, httplib::Response& res) {
    reply_text(res, "  the cat is stuck up the tree.  ");
  });
  EndpointConfig ep = test_endpoint(server);
  setenv("APHGEN_API_TOKEN", "secret-token", 1);
  std::string text = request_completion(ep, "be brief", "describe the scene", SamplingParams{});
  unsetenv("APHGEN_API_TOKEN");
  CHECK(text == "the cat is stuck up the tree.");  // trimmed

  auto bodies = server.bodies();
  REQUIRE(bodies.size() == 1);
  json payload = json::parse(bodies[0]);
  CHECK(payload["model"] == "stub-model");
  CHECK(payload["temperature"] == doctest::Approx(0.7));
  CHECK(payload["top_p"] == doctest::Approx(0.9));
  CHECK(payload["repetition_penalty"] == doctest::Approx(1.0));
  REQUIRE(payload["messages"].size() == 2);
  CHECK(payload["messages"][0]["role"] == "system");
  CHECK(payload["messages"][0]["content"] == "be brief");
  CHECK(payload["messages"][1]["role"] == "user");
  CHECK(payload["messages"][1]["content"] == "describe the scene");

  auto auth = server.auth_headers();
  REQUIRE(auth.size() == 1);
  CHECK(auth[0] == "Bearer secret-token");
}

TEST_CASE("persistent server errors surface as HttpError after retries") {
  std::atomic<int> calls{0};
  StubServer server([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 500;
    res.set_content("boom", "text/plain");
  });
  EndpointConfig ep = test_endpoint(server);  // max_retries = 2 -> 3 attempts
  try {
    request_completion(ep, "s", "u", SamplingParams{});
    FAIL("expected HttpError");
  } catch (const HttpError& e) {
    CHECK(e.status == 500);
  }
  CHECK(calls == 3);
}

TEST_CASE("a transient error is retried and then succeeds") {
  std::atomic<int> calls{0};
  StubServer server([&](const httplib::Request&, httplib::Response& res) {
    if (++calls == 1) {
      res.status = 503;
      return;
    }
    reply_text(res, "ok text");
  });
  CHECK(request_completion(test_endpoint(server), "s", "u", SamplingParams{}) == "ok text");
  CHECK(calls == 2);
}

TEST_CASE("an unreachable endpoint raises EndpointUnreachable") {
  EndpointConfig ep;
  ep.base_url = "http://127.0.0.1:1";  // nothing listens there
  ep.model_name = "stub-model";
  ep.timeout_s = 1.0;
  ep.max_retries = 0;
  CHECK_THROWS_AS(request_completion(ep, "s", "u", SamplingParams{}), EndpointUnreachable);
}

TEST_CASE("empty or malformed completions raise EmptyCompletion") {
  int mode = 0;
  StubServer server([&](const httplib::Request&, httplib::Response& res) {
    switch (mode) {
      case 0: reply_text(res, "   "); break;
      case 1: res.set_content("{\"choices\":[]}", "application/json"); break;
      default: res.set_content("not json", "application/json"); break;
    }
  });
  EndpointConfig ep = test_endpoint(server);
  for (mode = 0; mode < 3; ++mode)
    CHECK_THROWS_AS(request_completion(ep, "s", "u", SamplingParams{}), EmptyCompletion);
}

TEST_CASE("a full run yields 32 records in plan order") {
  StubServer server([](const httplib::Request& req, httplib::Response& res) {
    json payload = json::parse(req.body);
    // Reply with the user text so records are traceable to their template.
    reply_text(res, payload["messages"][1]["content"].get<std::string>());
  });
  LlmRunPlan plan;
  plan.pack = default_prompt_pack();
  plan.repeats_per_template = 2;
  plan.exclusions = default_exclusions();
  LlmRunResult result = generate_llm_corpus(plan, test_endpoint(server));

  CHECK(result.records.size() == 32);
  CHECK(result.skipped.empty());
  std::size_t i = 0;
  for (Severity sev : kAllSeverities) {
    std::size_t per_severity = 0;
    for (int t = 1; t <= 4; ++t)
      for (int r = 0; r < 2; ++r, ++i, ++per_severity) {
        const TranscriptRecord& rec = result.records[i];
        CHECK(rec.severity == sev);
        CHECK(rec.template_id == t);
        CHECK(rec.method == "llm");
        CHECK(rec.model == std::string("stub-model"));
        CHECK_FALSE(rec.seed.has_value());
        CHECK(rec.transcript == plan.pack.find(sev, t).user_text);
        CHECK(rec.word_count > 0);
      }
    CHECK(per_severity == 8);
  }
}

TEST_CASE("parallel runs produce the same record order as serial runs") {
  StubServer server([](const httplib::Request& req, httplib::Response& res) {
    json payload = json::parse(req.body);
    reply_text(res, payload["messages"][1]["content"].get<std::string>());
  });
  LlmRunPlan plan;
  plan.pack = default_prompt_pack();
  plan.exclusions = default_exclusions();
  EndpointConfig serial = test_endpoint(server);
  EndpointConfig parallel = test_endpoint(server);
  parallel.max_parallel = 4;
  auto a = generate_llm_corpus(plan, serial);
  auto b = generate_llm_corpus(plan, parallel);
  CHECK(a.records == b.records);
}

TEST_CASE("failures for one severity become skipped entries, not records") {
  StubServer server([](const httplib::Request& req, httplib::Response& res) {
    json payload = json::parse(req.body);
    std::string system = payload["messages"][0]["content"].get<std::string>();
    // The default pack names the severity in the system text.
    if (system.find("with severe aphasia") != std::string::npos) {
      res.status = 500;
      return;
    }
    reply_text(res, payload["messages"][1]["content"].get<std::string>());
  });
  LlmRunPlan plan;
  plan.pack = default_prompt_pack();
  plan.exclusions = default_exclusions();
  EndpointConfig ep = test_endpoint(server);
  ep.max_retries = 0;
  LlmRunResult result = generate_llm_corpus(plan, ep);
  CHECK(result.records.size() == 24);
  REQUIRE(result.skipped.size() == 8);
  for (const auto& skip : result.skipped) {
    CHECK(skip.severity == Severity::Severe);
    CHECK_FALSE(skip.error.empty());
  }
  for (const auto& rec : result.records) CHECK(rec.severity != Severity::Severe);
}

TEST_CASE("a run where everything fails throws AllRequestsFailed") {
  StubServer server([](const httplib::Request&, httplib::Response& res) { res.status = 500; });
  LlmRunPlan plan;
  plan.pack = default_prompt_pack();
  plan.exclusions = default_exclusions();
  EndpointConfig ep = test_endpoint(server);
  ep.max_retries = 0;
  CHECK_THROWS_AS(generate_llm_corpus(plan, ep), AllRequestsFailed);
}
