#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aphgen/severity.hpp"

namespace aphgen {

// One synthetic sample plus provenance and CIU metadata. `model` is empty for
// procedural records; `seed` is empty for LLM records.
struct TranscriptRecord {
  std::string id;
  std::string method;  // "procedural" | "llm"
  std::optional<std::string> model;
  Severity severity = Severity::Mild;
  std::optional<int> template_id;
  std::optional<std::uint64_t> seed;
  std::string transcript;
  std::size_t word_count = 0;
  std::size_t ciu_count = 0;
  double ciu_percentage = 0.0;
  std::string created_at;  // UTC timestamp, ISO 8601

  bool operator==(const TranscriptRecord&) const = default;
};

}  // namespace aphgen
