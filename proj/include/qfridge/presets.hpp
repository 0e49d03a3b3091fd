// qfridge/presets.hpp — named scenario presets for the study's standard
// parameter sets.
#pragma once

#include <string>
#include <vector>

#include "qfridge/run_config.hpp"

namespace qfridge {

// fig2a..fig2h, fig3a, fig3b, fig4a..fig4d, fig5.
std::vector<std::string> preset_names();

// Throws std::invalid_argument listing the valid names on an unknown one.
RunConfig preset(const std::string& name);

}  // namespace qfridge
