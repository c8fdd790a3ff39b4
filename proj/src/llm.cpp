#include "aphgen/llm.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "aphgen/errors.hpp"

namespace aphgen {

namespace {

using json = nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const PromptTemplate& PromptPack::find(Severity severity, int template_id) const {
  for (const auto& t : templates)
    if (t.severity == severity && t.template_id == template_id) return t;
  throw PackMalformed("template not found: " + to_string(severity) + " #" +
                      std::to_string(template_id));
}

PromptPack parse_prompt_pack(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw PackMalformed("pack file is not a JSON object");
  const json& pack = doc.contains("pack") ? doc.at("pack") : doc;
  PromptPack out;
  if (doc.contains("pack_model")) out.model_tag = doc.at("pack_model").get<std::string>();
  for (Severity sev : kAllSeverities) {
    std::string key = to_string(sev);
    if (!pack.contains(key)) throw PackMalformed("pack missing severity \"" + key + "\"");
    const json& arr = pack.at(key);
    if (!arr.is_array() || arr.size() != 4)
      throw PackMalformed("pack." + key + " must be an array of 4 templates");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& t = arr[i];
      int id = t.contains("id") ? t.at("id").get<int>() : static_cast<int>(i) + 1;
      if (id < 1 || id > 4) throw PackMalformed("pack." + key + ": template id out of range");
      for (const auto& existing : out.templates)
        if (existing.severity == sev && existing.template_id == id)
          throw PackMalformed("pack." + key + ": duplicate template id " + std::to_string(id));
      std::string system_text = t.value("system", "");
      std::string user_text = t.value("user", "");
      if (system_text.empty() || user_text.empty())
        throw PackMalformed("pack." + key + "[" + std::to_string(i) + "]: empty system/user text");
      out.templates.push_back({sev, id, system_text, user_text});
    }
  }
  return out;
}

PromptPack load_prompt_pack(const std::string& path) {
  return parse_prompt_pack(read_file(path));
}

std::string request_completion(const EndpointConfig& endpoint, const std::string& system_text,
                               const std::string& user_text, const SamplingParams& params) {
  httplib::Client client(endpoint.base_url);
  client.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int>(endpoint.timeout_s * 1000)));
  client.set_read_timeout(std::chrono::milliseconds(static_cast<int>(endpoint.timeout_s * 1000)));
  if (const char* token = std::getenv(endpoint.api_token_env.c_str()); token && *token)
    client.set_bearer_token_auth(token);

  json payload = {
      {"model", endpoint.model_name},
      {"messages",
       {{{"role", "system"}, {"content", system_text}},
        {{"role", "user"}, {"content", user_text}}}},
      {"temperature", params.temperature},
      {"top_p", params.top_p},
      // Top-level extension field; OpenAI-compatible servers that support it
      // (vLLM, llama.cpp, TGI) pick it up, others ignore unknown fields.
      {"repetition_penalty", params.repetition_penalty},
  };
  std::string body = payload.dump();

  int last_status = -1;
  for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(endpoint.backoff_ms << (attempt - 1)));
    auto res = client.Post("/v1/chat/completions", body, "application/json");
    if (!res) {
      last_status = 0;
      continue;
    }
    if (res->status != 200) {
      last_status = res->status;
      continue;
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded()) throw EmptyCompletion{};
    if (!reply.contains("choices") || !reply["choices"].is_array() || reply["choices"].empty())
      throw EmptyCompletion{};
    const json& choice = reply["choices"][0];
    std::string text;
    if (choice.contains("message") && choice["message"].contains("content") &&
        choice["message"]["content"].is_string())
      text = choice["message"]["content"].get<std::string>();
    else if (choice.contains("text") && choice["text"].is_string())
      text = choice["text"].get<std::string>();
    text = trim(text);
    if (text.empty()) throw EmptyCompletion{};
    return text;
  }
  if (last_status == 0) throw EndpointUnreachable("endpoint unreachable: " + endpoint.base_url);
  throw HttpError(last_status);
}

LlmRunResult generate_llm_corpus(const LlmRunPlan& plan, const EndpointConfig& endpoint) {
  if (plan.repeats_per_template < 1) throw ConfigError("repeats_per_template must be >= 1");
  if (plan.pack.model_tag && *plan.pack.model_tag != endpoint.model_name)
    std::cerr << "warning: prompt pack is tagged for model \"" << *plan.pack.model_tag
              << "\" but endpoint model is \"" << endpoint.model_name << "\"\n";

  struct Job {
    Severity severity;
    int template_id;
    int repeat;
  };
  std::vector<Job> jobs;
  for (Severity sev : kAllSeverities)
    for (int t = 1; t <= 4; ++t)
      for (int r = 0; r < plan.repeats_per_template; ++r) jobs.push_back({sev, t, r});

  struct Slot {
    bool ok = false;
    std::string text;
    std::string error;
  };
  std::vector<Slot> slots(jobs.size());

  auto run_job = [&](std::size_t i) {
    const Job& job = jobs[i];
    const PromptTemplate& tpl = plan.pack.find(job.severity, job.template_id);
    try {
      slots[i].text = request_completion(endpoint, tpl.system_text, tpl.user_text, plan.sampling);
      slots[i].ok = true;
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  };

  int workers = std::max(1, endpoint.max_parallel);
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_job(i);
      });
    for (auto& t : pool) t.join();
  }

  // Records assemble in plan order regardless of request scheduling.
  LlmRunResult result;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    if (!slots[i].ok) {
      result.skipped.push_back({job.severity, job.template_id, job.repeat, slots[i].error});
      continue;
    }
    CiuScore score = score_transcript(slots[i].text, plan.exclusions);
    TranscriptRecord rec;
    char idbuf[96];
    std::snprintf(idbuf, sizeof(idbuf), "llm-%s-t%d-r%d", to_string(job.severity).c_str(),
                  job.template_id, job.repeat);
    rec.id = idbuf;
    rec.method = "llm";
    rec.model = endpoint.model_name;
    rec.severity = job.severity;
    rec.template_id = job.template_id;
    rec.transcript = slots[i].text;
    rec.word_count = score.word_count;
    rec.ciu_count = score.ciu_count;
    rec.ciu_percentage = score.ciu_percentage;
    rec.created_at = plan.created_at;
    result.records.push_back(std::move(rec));
  }
  if (result.records.empty())
    throw AllRequestsFailed("all " + std::to_string(jobs.size()) + " requests failed" +
                            (result.skipped.empty() ? "" : "; first error: " + result.skipped.front().error));
  return result;
}

}  // namespace aphgen
