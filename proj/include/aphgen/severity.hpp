#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace aphgen {

// Four-class severity gradation, ordered Mild < Moderate < Severe < VerySevere.
enum class Severity { Mild = 0, Moderate = 1, Severe = 2, VerySevere = 3 };

inline constexpr std::array<Severity, 4> kAllSeverities = {
    Severity::Mild, Severity::Moderate, Severity::Severe, Severity::VerySevere};

std::string to_string(Severity s);
std::string display_name(Severity s);
std::optional<Severity> parse_severity(std::string_view text);

}  // namespace aphgen
