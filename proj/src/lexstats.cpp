#include "aphgen/lexstats.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "aphgen/errors.hpp"

namespace aphgen {

namespace {
constexpr std::size_t kNdwWindow = 50;
}

double ttr(const TokenSeq& tokens) {
  if (tokens.empty()) throw EmptyInputError{};
  std::set<std::string> types(tokens.begin(), tokens.end());
  return static_cast<double>(types.size()) / static_cast<double>(tokens.size());
}

double ndw(const TokenSeq& tokens, int trials, Rng& rng) {
  if (tokens.empty()) throw EmptyInputError{};
  if (trials < 1) throw ConfigError("ndw trials must be >= 1");
  if (tokens.size() < kNdwWindow) {
    std::set<std::string> types(tokens.begin(), tokens.end());
    return static_cast<double>(types.size());
  }
  // NDW-ER50: mean distinct-type count over random 50-token samples drawn
  // without replacement.
  std::vector<std::size_t> index(tokens.size());
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::iota(index.begin(), index.end(), std::size_t{0});
    std::set<std::string> types;
    for (std::size_t k = 0; k < kNdwWindow; ++k) {
      std::size_t j = k + rng.next_index(index.size() - k);
      std::swap(index[k], index[j]);
      types.insert(tokens[index[k]]);
    }
    total += static_cast<double>(types.size());
  }
  return total / trials;
}

double lexical_density(const TokenSeq& tokens, const std::set<std::string>& function_words) {
  if (tokens.empty()) throw EmptyInputError{};
  std::size_t content = 0;
  for (const auto& t : tokens)
    if (!function_words.count(t)) ++content;
  return static_cast<double>(content) / static_cast<double>(tokens.size());
}

double avg_word_length(const TokenSeq& tokens) {
  if (tokens.empty()) throw EmptyInputError{};
  std::size_t letters = 0;
  for (const auto& t : tokens)
    for (unsigned char c : t)
      if (c != '\'' && c != '-') ++letters;
  return static_cast<double>(letters) / static_cast<double>(tokens.size());
}

LexicalProfile profile_tokens(const TokenSeq& tokens, const AnalysisSettings& settings, Rng& rng) {
  if (tokens.empty()) throw EmptyInputError{};
  LexicalProfile p;
  p.ttr = ttr(tokens);
  p.ndw = ndw(tokens, settings.ndw_trials, rng);
  p.ld = lexical_density(tokens, settings.function_words);
  p.words = tokens.size();
  p.avg_len = avg_word_length(tokens);
  return p;
}

LexicalProfile profile_transcript(std::string_view text, const AnalysisSettings& settings,
                                  Rng& rng) {
  return profile_tokens(tokenize(text), settings, rng);
}

std::vector<SeverityMeans> aggregate_by_severity(const std::vector<TranscriptRecord>& records,
                                                 const std::vector<LexicalProfile>& profiles) {
  std::map<Severity, SeverityMeans> acc;
  for (std::size_t i = 0; i < records.size() && i < profiles.size(); ++i) {
    SeverityMeans& m = acc[records[i].severity];
    m.severity = records[i].severity;
    m.ttr += profiles[i].ttr;
    m.ndw += profiles[i].ndw;
    m.ld += profiles[i].ld;
    m.words += static_cast<double>(profiles[i].words);
    m.avg_len += profiles[i].avg_len;
    ++m.sample_n;
  }
  std::vector<SeverityMeans> out;
  for (Severity sev : kAllSeverities) {
    auto it = acc.find(sev);
    if (it == acc.end()) {
      std::cerr << "warning: no records for severity " << display_name(sev)
                << "; omitting from aggregation\n";
      continue;
    }
    SeverityMeans m = it->second;
    double n = static_cast<double>(m.sample_n);
    m.ttr /= n;
    m.ndw /= n;
    m.ld /= n;
    m.words /= n;
    m.avg_len /= n;
    out.push_back(m);
  }
  return out;
}

CompositeMeans average_of_means(const std::vector<SeverityMeans>& rows) {
  if (rows.empty()) throw EmptyInputError{};
  CompositeMeans c;
  for (const auto& r : rows) {
    c.ttr += r.ttr;
    c.ndw += r.ndw;
    c.ld += r.ld;
    c.words += r.words;
    c.avg_len += r.avg_len;
  }
  double n = static_cast<double>(rows.size());
  c.ttr /= n;
  c.ndw /= n;
  c.ld /= n;
  c.words /= n;
  c.avg_len /= n;
  return c;
}

const BaselineRow& healthy_baseline() {
  static const BaselineRow row{"Healthy", 0.52, 37.53, 0.58, 220.75, 3.83};
  return row;
}

const BaselineRow& aphasic_baseline() {
  static const BaselineRow row{"Aphasic", 0.56, 29.32, 0.54, 76.38, 3.58};
  return row;
}

}  // namespace aphgen
