#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aphgen/ciu.hpp"
#include "aphgen/record.hpp"
#include "aphgen/severity.hpp"

namespace aphgen {

struct PromptTemplate {
  Severity severity = Severity::Mild;
  int template_id = 1;  // 1..4
  std::string system_text;
  std::string user_text;
};

// 4 severities x 4 templates. Optionally tagged with the model the pack was
// written for; the runner warns (not errors) on mismatch.
struct PromptPack {
  std::vector<PromptTemplate> templates;
  std::optional<std::string> model_tag;

  const PromptTemplate& find(Severity severity, int template_id) const;
};

struct SamplingParams {
  double temperature = 0.7;
  double top_p = 0.9;
  double repetition_penalty = 1.0;
};

struct EndpointConfig {
  std::string base_url;  // e.g. http://127.0.0.1:8080
  std::string model_name;
  double timeout_s = 60.0;
  int max_retries = 2;
  int max_parallel = 1;
  int backoff_ms = 250;  // initial backoff, doubled per retry
  std::string api_token_env = "APHGEN_API_TOKEN";
};

struct LlmRunPlan {
  PromptPack pack;
  int repeats_per_template = 2;  // 4 x repeats records per severity
  SamplingParams sampling;
  ExclusionLexicons exclusions;
  std::string created_at = "1970-01-01T00:00:00Z";
};

struct SkippedRequest {
  Severity severity = Severity::Mild;
  int template_id = 1;
  int repeat = 0;
  std::string error;
};

struct LlmRunResult {
  std::vector<TranscriptRecord> records;
  std::vector<SkippedRequest> skipped;
};

// Parses the "pack" object of a config file: pack.<severity> is an array of
// four {system, user} objects. Throws PackMalformed on missing severities,
// duplicates, or empty texts.
PromptPack load_prompt_pack(const std::string& path);
PromptPack parse_prompt_pack(const std::string& json_text);

// One chat-completion call. The payload carries the model name, a system and
// a user message, temperature, top_p, and repetition_penalty (top-level
// extension field). Returns the first choice's text, trimmed.
std::string request_completion(const EndpointConfig& endpoint, const std::string& system_text,
                               const std::string& user_text, const SamplingParams& params);

// repeats_per_template completions per template, ordered by
// (severity, template_id, repeat). Failed requests become skipped entries.
// Throws AllRequestsFailed if nothing was produced.
LlmRunResult generate_llm_corpus(const LlmRunPlan& plan, const EndpointConfig& endpoint);

PromptPack default_prompt_pack();

}  // namespace aphgen
