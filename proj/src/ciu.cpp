#include "aphgen/ciu.hpp"

namespace aphgen {

CiuScore count_cius(const TokenSeq& tokens, const ExclusionLexicons& exclusions) {
  CiuScore score;
  score.word_count = tokens.size();
  const std::string* last_counted = nullptr;
  for (const auto& token : tokens) {
    if (exclusions.excludes(token)) continue;
    if (last_counted && token == *last_counted) continue;  // immediate repetition
    ++score.ciu_count;
    last_counted = &token;
  }
  score.ciu_percentage =
      score.word_count == 0
          ? 0.0
          : 100.0 * static_cast<double>(score.ciu_count) / static_cast<double>(score.word_count);
  return score;
}

CiuScore score_transcript(std::string_view text, const ExclusionLexicons& exclusions) {
  return count_cius(tokenize(text), exclusions);
}

}  // namespace aphgen
