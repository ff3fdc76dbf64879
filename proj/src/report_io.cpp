#include "ptdarboux/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptd {

namespace {

nlohmann::ordered_json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  auto& params = doc["parameters"];
  params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) params[key] = number(value);
  auto& checks = doc["checks"];
  checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["computed"] = number(c.computed);
    entry["reference"] = number(c.reference);
    entry["abs_dev"] = number(c.abs_dev);
    entry["rel_dev"] = number(c.rel_dev);
    entry["tolerance"] = number(c.tolerance);
    entry["passed"] = c.passed;
    checks.push_back(std::move(entry));
  }
  doc["overall"] = report.overall;
  return doc;
}

std::string report_json(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "name,computed,reference,abs_dev,rel_dev,tolerance,passed\n";
  for (const auto& c : report.checks) {
    out << csv_field(c.name) << ',' << format_number(c.computed) << ','
        << format_number(c.reference) << ',' << format_number(c.abs_dev) << ','
        << format_number(c.rel_dev) << ',' << format_number(c.tolerance) << ','
        << (c.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace ptd
