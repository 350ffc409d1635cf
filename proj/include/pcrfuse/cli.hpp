#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcrfuse/mass.hpp"

namespace pcrfuse::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,       // unreadable or malformed document, invalid masses
  kConstraintError = 2,  // usage error or a rule constraint was violated
};

/// Malformed or invalid input document. Maps to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceSpec {
  std::string name;
  std::uint64_t weight = 1;
  MassFunction mass;
};

/// {"frame": [...], "sources": [{"name", "weight"?, "masses": {key: m}}]}
/// Focal keys are singleton names joined by '|', in any order.
struct InputDocument {
  Frame frame;
  std::vector<SourceSpec> sources;
};

/// Parses a focal-element key such as "B|A" against `frame`.
/// Throws InputError on unknown names, duplicates or empty parts.
FocalSet parse_focal_key(const Frame& frame, std::string_view key);

InputDocument parse_document(std::string_view json_text);
InputDocument load_document(const std::string& path);

/// Fixed-point rendering with `precision` decimals. Rounds to nearest,
/// ties to even, on the exact binary value.
std::string format_fixed(double value, int precision);

/// Result of a fuse command in printable form. Rows are in canonical
/// focal order; `conflict` is set for the conjunctive rule only.
struct Report {
  std::string rule;
  std::vector<std::pair<std::string, double>> masses;
  std::optional<double> conflict;
};

std::string render_table(const Report& report, int precision);
/// {"rule":..., "masses":{key:number}, "conflict":number?} on one line.
std::string render_json(const Report& report, int precision);
/// Inverse of render_json. Throws InputError on malformed text.
Report parse_report_json(std::string_view text);

/// Runs the tool with `args` (excluding the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcrfuse::cli
