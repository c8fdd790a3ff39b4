#include "aphgen/severity.hpp"

#include <algorithm>
#include <cctype>

namespace aphgen {

std::string to_string(Severity s) {
  switch (s) {
    case Severity::Mild: return "mild";
    case Severity::Moderate: return "moderate";
    case Severity::Severe: return "severe";
    case Severity::VerySevere: return "very_severe";
  }
  return "mild";
}

std::string display_name(Severity s) {
  switch (s) {
    case Severity::Mild: return "Mild";
    case Severity::Moderate: return "Moderate";
    case Severity::Severe: return "Severe";
    case Severity::VerySevere: return "Very Severe";
  }
  return "Mild";
}

std::optional<Severity> parse_severity(std::string_view text) {
  std::string norm;
  norm.reserve(text.size());
  for (char c : text) {
    if (c == ' ' || c == '-') c = '_';
    norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (norm == "mild") return Severity::Mild;
  if (norm == "moderate") return Severity::Moderate;
  if (norm == "severe") return Severity::Severe;
  if (norm == "very_severe" || norm == "verysevere") return Severity::VerySevere;
  return std::nullopt;
}

}  // namespace aphgen
