#pragma once

#include <string>

#include "aphgen/lexstats.hpp"
#include "aphgen/llm.hpp"
#include "aphgen/procgen.hpp"

namespace aphgen {

// Everything the pipeline reads from one declarative JSON config file.
// Recognized keys (all optional, defaults apply):
//   base_sentences, fillers, paraphasia_map, protected, conjunctions,
//   profiles.<severity>.{drop,filler,para}, per_severity_count, master_seed,
//   created_at, exclusions.{fillers,conjunctions,irrelevant}, function_words,
//   ndw_trials, endpoint.{base_url,model,timeout_s,max_retries,max_parallel,
//   backoff_ms}, repeats_per_template, sampling.{temperature,top_p,
//   repetition_penalty}, pack.<severity>[4].{system,user}, pack_model
struct AppConfig {
  GenerationConfig generation;
  AnalysisSettings analysis;
  EndpointConfig endpoint;
  SamplingParams sampling;
  PromptPack pack;
  int repeats_per_template = 2;
};

AppConfig default_app_config();
AppConfig load_app_config(const std::string& path);       // throws ConfigError/IoError
AppConfig parse_app_config(const std::string& json_text); // throws ConfigError

}  // namespace aphgen
