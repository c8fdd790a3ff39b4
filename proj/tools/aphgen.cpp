// aphgen: synthesize, score, analyze, split and compare Cat Rescue
// picture-description corpora.
//
// Exit codes: 0 ok, 1 I/O error, 2 config/schema error, 3 endpoint failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aphgen/config.hpp"
#include "aphgen/corpus_io.hpp"
#include "aphgen/defaults.hpp"
#include "aphgen/errors.hpp"
#include "aphgen/lexstats.hpp"
#include "aphgen/llm.hpp"
#include "aphgen/procgen.hpp"

namespace {

using namespace aphgen;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEndpoint = 3;

// Output options take a stem, but accept a full <stem>.jsonl path too.
std::string strip_jsonl_suffix(std::string stem) {
  const std::string suffix = ".jsonl";
  if (stem.size() > suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0)
    stem.erase(stem.size() - suffix.size());
  return stem;
}

AppConfig load_config_or_default(const std::string& config_path) {
  if (config_path.empty()) return default_app_config();
  return load_app_config(config_path);
}

struct SummaryTable {
  std::vector<SeverityMeans> rows;
  CompositeMeans composite;
};

SummaryTable analyze_records(const std::vector<TranscriptRecord>& records,
                             const AnalysisSettings& settings) {
  std::vector<LexicalProfile> profiles;
  profiles.reserve(records.size());
  for (const auto& r : records) {
    // Seeded from the record id so reruns are identical.
    Rng rng(fnv1a64(r.id));
    profiles.push_back(profile_transcript(r.transcript, settings, rng));
  }
  SummaryTable t;
  t.rows = aggregate_by_severity(records, profiles);
  if (t.rows.empty()) throw SchemaError(0, "no records to analyze");
  t.composite = average_of_means(t.rows);
  return t;
}

void write_summary_csv(const SummaryTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "severity,ttr,ndw,ld,words,avg_len,n\n";
  char buf[256];
  for (const auto& r : t.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f,%.6f,%.6f,%zu\n",
                  to_string(r.severity).c_str(), r.ttr, r.ndw, r.ld, r.words, r.avg_len,
                  r.sample_n);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "average_of_means,%.6f,%.6f,%.6f,%.6f,%.6f,\n",
                t.composite.ttr, t.composite.ndw, t.composite.ld, t.composite.words,
                t.composite.avg_len);
  out << buf;
  if (!out) throw IoError("write failed: " + path);
}

void print_summary(const SummaryTable& t) {
  std::printf("%-16s %6s %6s %6s %7s %6s %6s\n", "severity", "TTR", "NDW", "LD", "Words",
              "Avg", "n");
  for (const auto& r : t.rows)
    std::printf("%-16s %6.2f %6.2f %6.2f %7.2f %6.2f %6zu\n", display_name(r.severity).c_str(),
                r.ttr, r.ndw, r.ld, r.words, r.avg_len, r.sample_n);
  std::printf("%-16s %6.2f %6.2f %6.2f %7.2f %6.2f\n", "average of means", t.composite.ttr,
              t.composite.ndw, t.composite.ld, t.composite.words, t.composite.avg_len);
}

// Reads the average_of_means row back out of an analyze CSV.
CompositeMeans read_composite_row(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("average_of_means,", 0) != 0) continue;
    CompositeMeans c;
    if (std::sscanf(line.c_str(), "average_of_means,%lf,%lf,%lf,%lf,%lf", &c.ttr, &c.ndw, &c.ld,
                    &c.words, &c.avg_len) != 5)
      throw SchemaError(line_no, "malformed average_of_means row in " + path);
    return c;
  }
  throw SchemaError(line_no, "no average_of_means row in " + path + " (not an analyze output?)");
}

int run_gen_proc(const std::string& config_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed, std::optional<int> per_severity) {
  std::string out_stem = strip_jsonl_suffix(out_path);
  AppConfig cfg = load_config_or_default(config_path);
  if (seed) cfg.generation.master_seed = *seed;
  if (per_severity) cfg.generation.per_severity_count = *per_severity;
  cfg.generation.validate();
  auto records = generate_corpus(cfg.generation);
  write_jsonl(records, out_stem + ".jsonl");
  for (Severity sev : kAllSeverities) {
    std::size_t n = 0;
    for (const auto& r : records)
      if (r.severity == sev) ++n;
    std::printf("%-12s %zu\n", to_string(sev).c_str(), n);
  }
  std::printf("total        %zu -> %s.jsonl\n", records.size(), out_stem.c_str());
  return kExitOk;
}

int run_gen_llm(const std::string& config_path, const std::string& out_path,
                std::optional<int> repeats, const std::string& endpoint_url,
                const std::string& model) {
  std::string out_stem = strip_jsonl_suffix(out_path);
  AppConfig cfg = load_config_or_default(config_path);
  if (repeats) cfg.repeats_per_template = *repeats;
  if (!endpoint_url.empty()) cfg.endpoint.base_url = endpoint_url;
  if (!model.empty()) cfg.endpoint.model_name = model;
  if (cfg.endpoint.base_url.empty())
    throw ConfigError("no endpoint configured (use --endpoint-url or endpoint.base_url)");

  LlmRunPlan plan;
  plan.pack = cfg.pack;
  plan.repeats_per_template = cfg.repeats_per_template;
  plan.sampling = cfg.sampling;
  plan.exclusions = cfg.generation.exclusions;
  plan.created_at = cfg.generation.created_at;
  LlmRunResult result = generate_llm_corpus(plan, cfg.endpoint);

  write_jsonl(result.records, out_stem + ".jsonl");
  write_csv(result.records, out_stem + ".csv");
  std::printf("generated %zu records, skipped %zu -> %s.jsonl, %s.csv\n", result.records.size(),
              result.skipped.size(), out_stem.c_str(), out_stem.c_str());
  for (const auto& s : result.skipped)
    std::fprintf(stderr, "skipped %s t%d r%d: %s\n", to_string(s.severity).c_str(), s.template_id,
                 s.repeat, s.error.c_str());
  return kExitOk;
}

int run_analyze(const std::string& in_jsonl, const std::string& out_csv,
                const std::string& config_path, std::optional<int> trials) {
  AppConfig cfg = load_config_or_default(config_path);
  if (trials) cfg.analysis.ndw_trials = *trials;
  auto records = read_jsonl(in_jsonl);
  if (records.empty()) throw SchemaError(0, "input corpus is empty: " + in_jsonl);
  SummaryTable t = analyze_records(records, cfg.analysis);
  if (!out_csv.empty()) write_summary_csv(t, out_csv);
  print_summary(t);
  return kExitOk;
}

int run_split(const std::string& in_jsonl, const std::string& fractions, std::uint64_t seed,
              const std::string& out_stem) {
  SplitSpec spec;
  spec.split_seed = seed;
  if (!fractions.empty()) {
    double a, b, c;
    if (std::sscanf(fractions.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
      throw ConfigError("--fractions must be three comma-separated numbers, e.g. 0.8,0.1,0.1");
    spec.train_fraction = a;
    spec.val_fraction = b;
    spec.test_fraction = c;
  }
  spec.validate();
  auto records = read_jsonl(in_jsonl);
  SplitResult split = split_corpus(records, spec);
  std::string stem = strip_jsonl_suffix(out_stem.empty() ? in_jsonl : out_stem);
  write_jsonl(split.train, stem + ".train.jsonl");
  write_jsonl(split.val, stem + ".val.jsonl");
  write_jsonl(split.test, stem + ".test.jsonl");
  std::printf("train %zu / val %zu / test %zu -> %s.{train,val,test}.jsonl\n", split.train.size(),
              split.val.size(), split.test.size(), stem.c_str());
  return kExitOk;
}

int run_compare(const std::vector<std::string>& summary_csvs, const std::string& out_csv) {
  if (summary_csvs.empty()) throw ConfigError("compare needs at least one analyze CSV");
  std::vector<std::string> names;
  std::vector<CompositeMeans> cols;
  for (const auto& path : summary_csvs) {
    names.push_back(std::filesystem::path(path).stem().string());
    cols.push_back(read_composite_row(path));
  }
  const BaselineRow& base = aphasic_baseline();
  const char* measures[5] = {"ttr", "ndw", "ld", "words", "avg_len"};
  auto field = [](const CompositeMeans& c, int i) {
    switch (i) {
      case 0: return c.ttr;
      case 1: return c.ndw;
      case 2: return c.ld;
      case 3: return c.words;
      default: return c.avg_len;
    }
  };
  double base_vals[5] = {base.ttr, base.ndw, base.ld, base.words, base.avg_len};

  std::ostringstream csv;
  csv << "measure,aphasic_actual";
  for (const auto& n : names) csv << ',' << n;
  csv << '\n';
  std::printf("%-8s %14s", "measure", "aphasic_actual");
  for (const auto& n : names) std::printf(" %14s", n.c_str());
  std::printf("\n");
  char buf[64];
  for (int i = 0; i < 5; ++i) {
    std::snprintf(buf, sizeof(buf), "%.2f", base_vals[i]);
    csv << measures[i] << ',' << buf;
    std::printf("%-8s %14s", measures[i], buf);
    for (const auto& c : cols) {
      std::snprintf(buf, sizeof(buf), "%.2f", field(c, i));
      csv << ',' << buf;
      std::printf(" %14s", buf);
    }
    csv << '\n';
    std::printf("\n");
  }
  if (!out_csv.empty()) {
    std::ofstream out(out_csv, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + out_csv);
    out << csv.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic Cat Rescue picture-description corpus toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_stem, in_jsonl, out_csv, fractions, endpoint_url, model;
  std::optional<std::uint64_t> seed_opt;
  std::optional<int> per_severity_opt, repeats_opt, trials_opt;
  std::uint64_t split_seed = 0;
  std::vector<std::string> compare_inputs;

  auto* gen_proc = app.add_subcommand("gen-proc", "Generate the procedural corpus");
  gen_proc->add_option("--config", config_path, "JSON config file");
  gen_proc->add_option("--out", out_stem, "Output stem (<stem>.jsonl)")->required();
  gen_proc->add_option("--seed", seed_opt, "Master seed override");
  gen_proc->add_option("--per-severity", per_severity_opt, "Records per severity override");

  auto* gen_llm = app.add_subcommand("gen-llm", "Generate a corpus via an LLM endpoint");
  gen_llm->add_option("--config", config_path, "JSON config file");
  gen_llm->add_option("--out", out_stem, "Output stem (<stem>.jsonl + <stem>.csv)")->required();
  gen_llm->add_option("--repeats", repeats_opt, "Completions per template");
  gen_llm->add_option("--endpoint-url", endpoint_url, "OpenAI-compatible base URL");
  gen_llm->add_option("--model", model, "Model name");

  auto* analyze = app.add_subcommand("analyze", "Lexical-richness summary of a corpus");
  analyze->add_option("--config", config_path, "JSON config file");
  analyze->add_option("--in", in_jsonl, "Input JSONL corpus")->required();
  analyze->add_option("--out", out_csv, "Summary CSV output");
  analyze->add_option("--trials", trials_opt, "NDW-ER50 sampling trials");

  auto* split = app.add_subcommand("split", "Stratified train/val/test split");
  split->add_option("--in", in_jsonl, "Input JSONL corpus")->required();
  split->add_option("--fractions", fractions, "train,val,test (default 0.8,0.1,0.1)");
  split->add_option("--seed", split_seed, "Split seed");
  split->add_option("--out", out_stem, "Output stem (default: input stem)");

  auto* compare = app.add_subcommand("compare", "Compare analyze outputs to the human baseline");
  compare->add_option("summaries", compare_inputs, "analyze CSV outputs");
  compare->add_option("--out", out_csv, "Report CSV output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_proc->parsed())
      return run_gen_proc(config_path, out_stem, seed_opt, per_severity_opt);
    if (gen_llm->parsed())
      return run_gen_llm(config_path, out_stem, repeats_opt, endpoint_url, model);
    if (analyze->parsed()) return run_analyze(in_jsonl, out_csv, config_path, trials_opt);
    if (split->parsed()) return run_split(in_jsonl, fractions, split_seed, out_stem);
    if (compare->parsed()) return run_compare(compare_inputs, out_csv);
  } catch (const PackMalformed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const SchemaError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const AllRequestsFailed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEndpoint;
  } catch (const EndpointUnreachable& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEndpoint;
  } catch (const HttpError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEndpoint;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitOk;
}
