#pragma once

#include <string>

#include "birat/analysis.hpp"

namespace birat {

std::string report_to_json(const AnalysisReport& r, int indent = 2);
std::string rees_to_json(const ReesPresentation& P, int indent = 2);
std::string betti_to_json(const BettiTable& bt, int indent = 2);

// MapFile: {"field": "Q"|"Fp:p", "variables": [..], "source_ideal": [..], "forms": [..]}
RationalMapDescriptor descriptor_from_json(const std::string& json_text, const Config& cfg,
                                           std::optional<FieldSpec> field_override = {});

} // namespace birat
