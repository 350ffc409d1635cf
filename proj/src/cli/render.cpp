#include <cstdio>

#include "json.hpp"
#include "pcrfuse/cli.hpp"

namespace pcrfuse::cli {

std::string format_fixed(double value, int precision) {
  // printf rounds the exact binary value in the current rounding mode,
  // which is round-to-nearest-even by default.
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

std::string render_table(const Report& report, int precision) {
  std::string out;
  for (const auto& [key, value] : report.masses) {
    out += key + ' ' + format_fixed(value, precision) + '\n';
  }
  if (report.conflict) {
    out += "CONFLICT " + format_fixed(*report.conflict, precision) + '\n';
  }
  return out;
}

std::string render_json(const Report& report, int precision) {
  using nlohmann::json;
  std::string out = "{\"rule\":" + json(report.rule).dump() + ",\"masses\":{";
  bool first = true;
  for (const auto& [key, value] : report.masses) {
    if (!first) out += ',';
    first = false;
    out += json(key).dump() + ':' + format_fixed(value, precision);
  }
  out += '}';
  if (report.conflict) {
    out += ",\"conflict\":" + format_fixed(*report.conflict, precision);
  }
  out += "}\n";
  return out;
}

Report parse_report_json(std::string_view text) {
  using nlohmann::ordered_json;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rule") || !doc["rule"].is_string() ||
      !doc.contains("masses") || !doc["masses"].is_object()) {
    throw InputError("report needs a string \"rule\" and a \"masses\" object");
  }
  Report report;
  report.rule = doc["rule"].get<std::string>();
  for (const auto& [key, value] : doc["masses"].items()) {
    if (!value.is_number()) throw InputError("report mass for '" + key + "' is not a number");
    report.masses.emplace_back(key, value.get<double>());
  }
  if (doc.contains("conflict")) {
    if (!doc["conflict"].is_number()) throw InputError("report conflict is not a number");
    report.conflict = doc["conflict"].get<double>();
  }
  return report;
}

}  // namespace pcrfuse::cli
