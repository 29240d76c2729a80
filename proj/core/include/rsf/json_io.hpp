#pragma once

#include "rsf/fusion.hpp"
#include "rsf/hecke.hpp"
#include "rsf/report.hpp"
#include "rsf/schurweyl.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsf {

// JSON serialization with deterministic key order (objects are sorted maps).
// Every *_to_json_text value parses back to an equal report via the matching
// *_from_json_text; parsers return nullopt on malformed input. The functions
// speak std::string so the public headers stay free of the JSON backend.

// {"12": "2/5", "21": "3/5"} — keys are one-line permutation names.
std::string hecke_element_to_json_text(const HeckeElement<Rational>& e, int indent = -1);
std::optional<HeckeElement<Rational>> hecke_element_from_json_text(const HeckeAlgebra& alg,
                                                                   std::string_view text);

std::string weight_text(const GlWeight& w);  // "2,1,0"; "" for the empty weight
std::optional<GlWeight> weight_from_text(std::string_view text);

std::string check_report_to_json_text(const CheckReport& report, int indent = -1);
std::optional<CheckReport> check_report_from_json_text(std::string_view text);

std::string module_report_to_json_text(const ModuleReport& report, int indent = -1);
std::optional<ModuleReport> module_report_from_json_text(std::string_view text);

std::string audit_report_to_json_text(const AuditReport& report, int indent = -1);
std::optional<AuditReport> audit_report_from_json_text(std::string_view text);

std::string fusion_comparisons_to_json_text(const std::vector<FusionComparison>& list,
                                            int indent = -1);
std::optional<std::vector<FusionComparison>> fusion_comparisons_from_json_text(
    std::string_view text);

}  // namespace rsf
