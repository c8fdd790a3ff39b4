#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "aphgen/text.hpp"

namespace aphgen {

struct CiuScore {
  std::size_t word_count = 0;
  std::size_t ciu_count = 0;
  double ciu_percentage = 0.0;  // 100 * ciu_count / word_count, 0 when empty
};

// Token categories a blind scorer can exclude. Sets must be pairwise disjoint.
struct ExclusionLexicons {
  std::set<std::string> fillers;
  std::set<std::string> conjunctions;
  std::set<std::string> irrelevant;

  bool excludes(const std::string& token) const {
    return fillers.count(token) || conjunctions.count(token) || irrelevant.count(token);
  }
};

// A token counts as a CIU iff it is not excluded and is not an immediate
// repetition of the previously counted token.
CiuScore count_cius(const TokenSeq& tokens, const ExclusionLexicons& exclusions);

// Tokenize then score with the given exclusions.
CiuScore score_transcript(std::string_view text, const ExclusionLexicons& exclusions);

}  // namespace aphgen
