#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hcext {

// Worked GL_n(q) examples: vertex tables, index bounds, and, for the
// "-matrix" variants, Young-module multiplicities and the improved bounds.
std::vector<std::string> report_names();

// Throws ValidationError for an unknown example name.
nlohmann::json build_report(std::string_view example);

// Fixed-width text rendering of build_report's document.
std::string render_report_text(const nlohmann::json& report);

}  // namespace hcext
