#pragma once

#include <string>

#include "douglas/energy.hpp"

namespace douglas {

enum class ReportFormat { json, csv };

// Bit-stable serialization: fixed field order, reals printed with 17
// significant digits. Timings are non-deterministic wall-clock values;
// passing include_timings=false omits them, making the bytes a pure
// function of the computed report.
std::string emit_report(const EnergyReport& report, ReportFormat format,
                        bool include_timings = true);

// Inverse of the JSON emission (values parse back bit-exactly).
EnergyReport parse_report_json(const std::string& text);

}  // namespace douglas
