#include "aphgen/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aphgen/defaults.hpp"
#include "aphgen/errors.hpp"

namespace aphgen {

namespace {

using json = nlohmann::json;

std::set<std::string> to_set(const json& arr, const std::string& key) {
  if (!arr.is_array()) throw ConfigError(key + " must be an array of strings");
  std::set<std::string> out;
  for (const auto& v : arr) out.insert(v.get<std::string>());
  return out;
}

std::vector<std::string> to_vector(const json& arr, const std::string& key) {
  if (!arr.is_array()) throw ConfigError(key + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

AppConfig default_app_config() {
  AppConfig cfg;
  cfg.generation = default_generation_config();
  cfg.analysis = default_analysis_settings();
  cfg.pack = default_prompt_pack();
  return cfg;
}

AppConfig parse_app_config(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw ConfigError("config file is not a JSON object");

  AppConfig cfg = default_app_config();
  GenerationConfig& gen = cfg.generation;
  try {
    if (doc.contains("base_sentences")) gen.base_sentences = to_vector(doc["base_sentences"], "base_sentences");
    if (doc.contains("fillers")) gen.lexicons.fillers = to_vector(doc["fillers"], "fillers");
    if (doc.contains("paraphasia_map")) {
      if (!doc["paraphasia_map"].is_object()) throw ConfigError("paraphasia_map must be an object");
      gen.lexicons.paraphasia_map.clear();
      for (const auto& [k, v] : doc["paraphasia_map"].items())
        gen.lexicons.paraphasia_map[k] = v.get<std::string>();
    }
    if (doc.contains("protected")) gen.lexicons.protected_words = to_set(doc["protected"], "protected");
    if (doc.contains("conjunctions")) gen.lexicons.conjunctions = to_set(doc["conjunctions"], "conjunctions");
    if (doc.contains("profiles")) {
      if (!doc["profiles"].is_object()) throw ConfigError("profiles must be an object");
      for (const auto& [key, value] : doc["profiles"].items()) {
        auto sev = parse_severity(key);
        if (!sev) throw ConfigError("profiles: unknown severity \"" + key + "\"");
        AugmentationProfile p = gen.profiles[*sev];
        if (value.contains("drop")) p.drop = value["drop"].get<double>();
        if (value.contains("filler")) p.filler = value["filler"].get<double>();
        if (value.contains("para")) p.para = value["para"].get<double>();
        gen.profiles[*sev] = p;
      }
    }
    if (doc.contains("per_severity_count")) gen.per_severity_count = doc["per_severity_count"].get<int>();
    if (doc.contains("master_seed")) gen.master_seed = doc["master_seed"].get<std::uint64_t>();
    if (doc.contains("created_at")) gen.created_at = doc["created_at"].get<std::string>();
    if (doc.contains("exclusions")) {
      const json& ex = doc["exclusions"];
      if (ex.contains("fillers")) gen.exclusions.fillers = to_set(ex["fillers"], "exclusions.fillers");
      if (ex.contains("conjunctions")) gen.exclusions.conjunctions = to_set(ex["conjunctions"], "exclusions.conjunctions");
      if (ex.contains("irrelevant")) gen.exclusions.irrelevant = to_set(ex["irrelevant"], "exclusions.irrelevant");
    }
    if (doc.contains("function_words")) cfg.analysis.function_words = to_set(doc["function_words"], "function_words");
    if (doc.contains("ndw_trials")) cfg.analysis.ndw_trials = doc["ndw_trials"].get<int>();
    if (doc.contains("endpoint")) {
      const json& ep = doc["endpoint"];
      if (ep.contains("base_url")) cfg.endpoint.base_url = ep["base_url"].get<std::string>();
      if (ep.contains("model")) cfg.endpoint.model_name = ep["model"].get<std::string>();
      if (ep.contains("timeout_s")) cfg.endpoint.timeout_s = ep["timeout_s"].get<double>();
      if (ep.contains("max_retries")) cfg.endpoint.max_retries = ep["max_retries"].get<int>();
      if (ep.contains("max_parallel")) cfg.endpoint.max_parallel = ep["max_parallel"].get<int>();
      if (ep.contains("backoff_ms")) cfg.endpoint.backoff_ms = ep["backoff_ms"].get<int>();
      if (cfg.endpoint.timeout_s <= 0.0) throw ConfigError("endpoint.timeout_s must be > 0");
    }
    if (doc.contains("repeats_per_template"))
      cfg.repeats_per_template = doc["repeats_per_template"].get<int>();
    if (doc.contains("sampling")) {
      const json& sp = doc["sampling"];
      if (sp.contains("temperature")) cfg.sampling.temperature = sp["temperature"].get<double>();
      if (sp.contains("top_p")) cfg.sampling.top_p = sp["top_p"].get<double>();
      if (sp.contains("repetition_penalty"))
        cfg.sampling.repetition_penalty = sp["repetition_penalty"].get<double>();
    }
    if (doc.contains("pack")) cfg.pack = parse_prompt_pack(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  gen.validate();
  return cfg;
}

AppConfig load_app_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_app_config(ss.str());
}

}  // namespace aphgen
