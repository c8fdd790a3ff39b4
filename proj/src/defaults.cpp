#include "aphgen/defaults.hpp"

namespace aphgen {

namespace {

GenerationConfig make_generation_config() {
  GenerationConfig cfg;
  cfg.base_sentences = {
      "The cat is stuck up the tree.",
      "The little girl called her father to use a ladder.",
      "But the ladder fell.",
      "They called the fire department.",
      "The fire department came to rescue the cat.",
  };
  cfg.lexicons.fillers = {"um",   "uh",     "oh",     "so",   "ah",  "yup",
                          "nope", "uh-huh", "um-hum", "then", "and"};
  // First entries follow the sample transcripts; the rest are invented
  // semantic/phonemic errors, configurable like everything else. Keys that are
  // also protected (cat, ladder) are never substituted.
  cfg.lexicons.paraphasia_map = {
      {"father", "mother"}, {"girl", "boy"},     {"cat", "dog"},
      {"ladder", "ledder"}, {"stuck", "stick"},  {"fell", "fall"},
      {"came", "come"},     {"rescue", "rescure"}, {"use", "juice"},
      {"little", "liddle"},
  };
  cfg.lexicons.protected_words = {"cat", "tree", "ladder", "fire", "department"};
  cfg.lexicons.conjunctions = {"and", "but", "so", "then", "or"};
  // Calibrated so that a 250-per-severity sample lands in the reference
  // per-severity word-count and CIU% bands while keeping the composite
  // TTR/NDW/LD means in range. Degradation is carried mostly by paraphasia:
  // higher drop/filler rates push TTR above and LD below their target bands.
  cfg.profiles = {
      {Severity::Mild, {0.005, 0.050, 0.05}},
      {Severity::Moderate, {0.020, 0.055, 0.30}},
      {Severity::Severe, {0.050, 0.060, 0.59}},
      {Severity::VerySevere, {0.100, 0.060, 0.93}},
  };
  cfg.per_severity_count = 2500;
  cfg.master_seed = 42;
  cfg.exclusions = default_exclusions();
  return cfg;
}

ExclusionLexicons make_exclusions() {
  ExclusionLexicons ex;
  ex.fillers = {"um", "uh", "oh", "ah", "yup", "nope", "uh-huh", "um-hum"};
  ex.conjunctions = {"and", "but", "so", "then", "or"};
  // A blind scorer cannot judge relevance; paraphasia products stand in for
  // irrelevant items.
  ex.irrelevant = {"mother", "boy",  "dog",   "ledder",  "stick",
                   "fall",   "come", "rescure", "juice", "liddle"};
  return ex;
}

AnalysisSettings make_analysis_settings() {
  AnalysisSettings s;
  s.function_words = {
      // determiners / pronouns
      "the", "a", "an", "that", "this", "these", "those", "her", "his", "their",
      "they", "he", "she", "it", "them", "him", "we", "you", "i",
      // prepositions
      "to", "up", "of", "in", "on", "at", "with", "for", "from",
      // conjunctions
      "and", "but", "or", "so", "then",
      // auxiliaries
      "is", "are", "was", "were", "be", "been", "am",
      // fillers
      "um", "uh", "oh", "ah", "yup", "nope", "uh-huh", "um-hum",
  };
  s.ndw_trials = 10;
  return s;
}

}  // namespace

const GenerationConfig& default_generation_config() {
  static const GenerationConfig cfg = make_generation_config();
  return cfg;
}

const ExclusionLexicons& default_exclusions() {
  static const ExclusionLexicons ex = make_exclusions();
  return ex;
}

const AnalysisSettings& default_analysis_settings() {
  static const AnalysisSettings s = make_analysis_settings();
  return s;
}

}  // namespace aphgen
