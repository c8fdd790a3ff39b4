#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "aphgen/record.hpp"
#include "aphgen/rng.hpp"
#include "aphgen/severity.hpp"
#include "aphgen/text.hpp"

namespace aphgen {

struct LexicalProfile {
  double ttr = 0.0;
  double ndw = 0.0;
  double ld = 0.0;
  std::size_t words = 0;
  double avg_len = 0.0;
};

struct SeverityMeans {
  Severity severity = Severity::Mild;
  double ttr = 0.0;
  double ndw = 0.0;
  double ld = 0.0;
  double words = 0.0;
  double avg_len = 0.0;
  std::size_t sample_n = 0;
};

// Composite "average of means" row: unweighted mean of per-severity means.
struct CompositeMeans {
  double ttr = 0.0;
  double ndw = 0.0;
  double ld = 0.0;
  double words = 0.0;
  double avg_len = 0.0;
};

struct AnalysisSettings {
  std::set<std::string> function_words;
  int ndw_trials = 10;
};

// Shipped Table-style baseline constants for the comparison report.
struct BaselineRow {
  std::string label;
  double ttr, ndw, ld, words, avg_len;
};

double ttr(const TokenSeq& tokens);  // throws EmptyInputError

// Basic NDW (distinct types) below 50 tokens; NDW-ER50 otherwise: mean distinct
// types over `trials` random 50-token samples drawn without replacement.
double ndw(const TokenSeq& tokens, int trials, Rng& rng);

double lexical_density(const TokenSeq& tokens, const std::set<std::string>& function_words);

// Mean letter count per token; apostrophes and hyphens do not count as letters.
double avg_word_length(const TokenSeq& tokens);

LexicalProfile profile_tokens(const TokenSeq& tokens, const AnalysisSettings& settings, Rng& rng);
LexicalProfile profile_transcript(std::string_view text, const AnalysisSettings& settings, Rng& rng);

// Arithmetic mean per field per severity, ordered Mild..VerySevere. Empty
// severity buckets are omitted (a warning goes to stderr).
std::vector<SeverityMeans> aggregate_by_severity(
    const std::vector<TranscriptRecord>& records,
    const std::vector<LexicalProfile>& profiles);

CompositeMeans average_of_means(const std::vector<SeverityMeans>& rows);

const BaselineRow& healthy_baseline();
const BaselineRow& aphasic_baseline();

}  // namespace aphgen
