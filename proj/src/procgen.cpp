#include "aphgen/procgen.hpp"

#include <algorithm>
#include <cstdio>

#include "aphgen/errors.hpp"

namespace aphgen {

void GenerationConfig::validate() const {
  if (base_sentences.size() != 5)
    throw ConfigError("base_sentences must contain exactly 5 sentences, got " +
                      std::to_string(base_sentences.size()));
  for (const auto& s : base_sentences)
    if (tokenize(s).empty()) throw ConfigError("base sentence is empty: \"" + s + "\"");
  for (Severity sev : kAllSeverities) {
    auto it = profiles.find(sev);
    if (it == profiles.end())
      throw ConfigError("missing augmentation profile for severity " + to_string(sev));
    const auto& p = it->second;
    for (double v : {p.drop, p.filler, p.para})
      if (v < 0.0 || v > 1.0)
        throw ConfigError("profile probabilities must lie in [0,1] for " + to_string(sev));
  }
  if (per_severity_count < 1) throw ConfigError("per_severity_count must be >= 1");
  for (const auto& f : lexicons.fillers)
    if (lexicons.protected_words.count(f))
      throw ConfigError("filler lexicon overlaps protected words: " + f);
}

TokenSeq apply_word_drop(const TokenSeq& tokens, double p_drop,
                         const std::set<std::string>& protected_words, Rng& rng) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (protected_words.count(token)) {
      out.push_back(token);
    } else if (!rng.chance(p_drop)) {
      out.push_back(token);
    }
  }
  if (out.empty() && !tokens.empty()) {
    // Never emit an empty sentence: keep the last protected token if any,
    // otherwise the first token.
    auto it = std::find_if(tokens.rbegin(), tokens.rend(), [&](const std::string& t) {
      return protected_words.count(t) > 0;
    });
    out.push_back(it != tokens.rend() ? *it : tokens.front());
  }
  return out;
}

TokenSeq apply_filler_insertion(const TokenSeq& tokens, double p_filler,
                                const std::vector<std::string>& fillers, Rng& rng) {
  if (p_filler > 0.0 && fillers.empty()) throw FillerLexiconEmpty{};
  TokenSeq out;
  out.reserve(tokens.size() + 2);
  for (const auto& token : tokens) {
    if (p_filler > 0.0 && rng.chance(p_filler)) out.push_back(fillers[rng.next_index(fillers.size())]);
    out.push_back(token);
  }
  if (p_filler > 0.0 && rng.chance(p_filler)) out.push_back(fillers[rng.next_index(fillers.size())]);
  return out;
}

std::pair<TokenSeq, std::vector<SubstitutionEvent>> apply_paraphasia(
    const TokenSeq& tokens, double p_para,
    const std::map<std::string, std::string>& paraphasia_map,
    const std::set<std::string>& protected_words, Rng& rng) {
  TokenSeq out;
  out.reserve(tokens.size());
  std::vector<SubstitutionEvent> log;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& token = tokens[i];
    auto it = paraphasia_map.find(token);
    if (it != paraphasia_map.end() && !protected_words.count(token) && rng.chance(p_para)) {
      out.push_back(it->second);
      log.push_back({i, token, it->second});
    } else {
      out.push_back(token);
    }
  }
  return {std::move(out), std::move(log)};
}

Sentence augment_sentence(const Sentence& sentence, const AugmentationProfile& profile,
                          const Lexicons& lexicons, Rng& rng) {
  TokenSeq t = apply_word_drop(sentence.tokens, profile.drop, lexicons.protected_words, rng);
  t = apply_filler_insertion(t, profile.filler, lexicons.fillers, rng);
  t = apply_paraphasia(t, profile.para, lexicons.paraphasia_map, lexicons.protected_words, rng)
          .first;
  return Sentence{std::move(t), sentence.terminal};
}

TranscriptRecord generate_transcript(const GenerationConfig& config, Severity severity,
                                     std::uint64_t record_seed, const std::string& id) {
  Rng rng(record_seed);
  const AugmentationProfile& profile = config.profiles.at(severity);
  std::string text;
  for (const auto& base : config.base_sentences) {
    Sentence s{tokenize(base), true};
    Sentence aug = augment_sentence(s, profile, config.lexicons, rng);
    if (!text.empty()) text.push_back(' ');
    text += join_tokens(aug.tokens);
    text.push_back('.');
  }
  CiuScore score = score_transcript(text, config.exclusions);
  TranscriptRecord rec;
  rec.id = id;
  rec.method = "procedural";
  rec.severity = severity;
  rec.seed = record_seed;
  rec.transcript = std::move(text);
  rec.word_count = score.word_count;
  rec.ciu_count = score.ciu_count;
  rec.ciu_percentage = score.ciu_percentage;
  rec.created_at = config.created_at;
  return rec;
}

std::vector<TranscriptRecord> generate_corpus(const GenerationConfig& config) {
  config.validate();
  std::vector<TranscriptRecord> out;
  out.reserve(static_cast<std::size_t>(config.per_severity_count) * kAllSeverities.size());
  for (Severity sev : kAllSeverities) {
    for (int i = 0; i < config.per_severity_count; ++i) {
      std::uint64_t seed = mix_seed(
          {config.master_seed, static_cast<std::uint64_t>(sev), static_cast<std::uint64_t>(i)});
      char idbuf[64];
      std::snprintf(idbuf, sizeof(idbuf), "proc-%s-%06d", to_string(sev).c_str(), i);
      out.push_back(generate_transcript(config, sev, seed, idbuf));
    }
  }
  return out;
}

}  // namespace aphgen
