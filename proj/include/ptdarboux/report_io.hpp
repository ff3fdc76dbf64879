#pragma once

#include <string>

#include "json.hpp"
#include "ptdarboux/verify.hpp"

namespace ptd {

// {"parameters": {...}, "checks": [{name, computed, reference, abs_dev,
// rel_dev, tolerance, passed}], "overall": bool}; non-finite numbers -> null.
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_json(const VerificationReport& report);

// Header `name,computed,reference,abs_dev,rel_dev,tolerance,passed`, numbers
// at 17 significant digits.
std::string report_csv(const VerificationReport& report);

// %.17g
std::string format_number(double value);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace ptd
