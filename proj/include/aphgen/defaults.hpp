#pragma once

#include "aphgen/lexstats.hpp"
#include "aphgen/procgen.hpp"

namespace aphgen {

// Shipped defaults: Cat Rescue base sentences, augmentation lexicons, the
// calibrated severity profiles, CIU exclusion sets and the function-word
// stoplist. All overridable through the config file.
const GenerationConfig& default_generation_config();
const ExclusionLexicons& default_exclusions();
const AnalysisSettings& default_analysis_settings();

}  // namespace aphgen
