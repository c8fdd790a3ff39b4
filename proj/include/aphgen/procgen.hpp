#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aphgen/ciu.hpp"
#include "aphgen/record.hpp"
#include "aphgen/rng.hpp"
#include "aphgen/severity.hpp"
#include "aphgen/text.hpp"

namespace aphgen {

// Per-severity probabilities for the three augmentation operators.
struct AugmentationProfile {
  double drop = 0.0;
  double filler = 0.0;
  double para = 0.0;
};

struct Lexicons {
  std::vector<std::string> fillers;
  std::map<std::string, std::string> paraphasia_map;
  std::set<std::string> protected_words;
  std::set<std::string> conjunctions;

  // Protected words win over the paraphasia map: a key that is also protected
  // is never substituted, so the effective key set excludes protected words.
  bool eligible_key(const std::string& token) const {
    return paraphasia_map.count(token) > 0 && protected_words.count(token) == 0;
  }
};

struct GenerationConfig {
  std::vector<std::string> base_sentences;  // exactly 5
  Lexicons lexicons;
  std::map<Severity, AugmentationProfile> profiles;  // all four present
  int per_severity_count = 2500;
  std::uint64_t master_seed = 42;
  // Stamped into every record. A config field (with a fixed default) rather
  // than wall-clock time: corpus output must be a pure function of the config.
  std::string created_at = "1970-01-01T00:00:00Z";
  ExclusionLexicons exclusions;

  void validate() const;  // throws ConfigError
};

struct SubstitutionEvent {
  std::size_t position;
  std::string original;
  std::string replacement;
};

// Each non-protected token is independently removed with probability p_drop.
// At least one token always survives.
TokenSeq apply_word_drop(const TokenSeq& tokens, double p_drop,
                         const std::set<std::string>& protected_words, Rng& rng);

// Before each token position and once at sentence end, inserts one uniformly
// chosen filler with probability p_filler. Originals keep their order.
TokenSeq apply_filler_insertion(const TokenSeq& tokens, double p_filler,
                                const std::vector<std::string>& fillers, Rng& rng);

// Replaces eligible map keys with their mapped value with probability p_para.
// Token count is unchanged.
std::pair<TokenSeq, std::vector<SubstitutionEvent>> apply_paraphasia(
    const TokenSeq& tokens, double p_para,
    const std::map<std::string, std::string>& paraphasia_map,
    const std::set<std::string>& protected_words, Rng& rng);

// drop -> filler -> para, in that order. Terminal punctuation is retained.
Sentence augment_sentence(const Sentence& sentence, const AugmentationProfile& profile,
                          const Lexicons& lexicons, Rng& rng);

TranscriptRecord generate_transcript(const GenerationConfig& config, Severity severity,
                                     std::uint64_t record_seed, const std::string& id);

// per_severity_count records per severity, ordered Mild..VerySevere. Record i
// of a severity uses seed mix(master_seed, severity, i), so output is
// independent of iteration order.
std::vector<TranscriptRecord> generate_corpus(const GenerationConfig& config);

}  // namespace aphgen
