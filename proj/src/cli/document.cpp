#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pcrfuse/cli.hpp"
#include "pcrfuse/error.hpp"

namespace pcrfuse::cli {
namespace {

using nlohmann::json;

Frame parse_frame(const json& doc) {
  if (!doc.contains("frame") || !doc["frame"].is_array()) {
    throw InputError("document needs a \"frame\" array of singleton names");
  }
  std::vector<std::string> names;
  for (const auto& item : doc["frame"]) {
    if (!item.is_string()) throw InputError("frame entries must be strings");
    auto name = item.get<std::string>();
    if (name.find('|') != std::string::npos) {
      throw InputError("frame name '" + name + "' contains the key separator '|'");
    }
    names.push_back(std::move(name));
  }
  try {
    return Frame(std::move(names));
  } catch (const Error& e) {
    throw InputError(std::string("invalid frame: ") + e.what());
  }
}

std::uint64_t parse_weight(const json& src, const std::string& name) {
  if (!src.contains("weight")) return 1;
  const auto& w = src["weight"];
  // nlohmann stores non-negative integers as unsigned.
  if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0) {
    throw InputError("source '" + name + "': weight must be a positive integer");
  }
  return w.get<std::uint64_t>();
}

SourceSpec parse_source(const json& src, const Frame& frame, std::size_t position) {
  const std::string where = "source " + std::to_string(position + 1);
  if (!src.is_object()) throw InputError(where + " must be an object");
  if (!src.contains("name") || !src["name"].is_string()) {
    throw InputError(where + " needs a string \"name\"");
  }
  const auto name = src["name"].get<std::string>();
  const std::uint64_t weight = parse_weight(src, name);

  if (!src.contains("masses") || !src["masses"].is_object()) {
    throw InputError("source '" + name + "' needs a \"masses\" object");
  }
  std::vector<MassEntry> raw;
  for (const auto& [key, value] : src["masses"].items()) {
    if (!value.is_number()) {
      throw InputError("source '" + name + "', key '" + key + "': mass must be a number");
    }
    FocalSet set;
    try {
      set = parse_focal_key(frame, key);
    } catch (const InputError& e) {
      throw InputError("source '" + name + "': " + e.what());
    }
    raw.push_back({set, value.get<double>()});
  }
  try {
    return {name, weight, validate_mass(raw, frame)};
  } catch (const Error& e) {
    throw InputError("source '" + name + "': " + e.what());
  }
}

}  // namespace

FocalSet parse_focal_key(const Frame& frame, std::string_view key) {
  FocalSet set;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = key.find('|', start);
    const std::string part(key.substr(start, bar == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : bar - start));
    if (part.empty()) {
      throw InputError("key '" + std::string(key) + "' has an empty element name");
    }
    const auto index = frame.index_of(part);
    if (!index) {
      throw InputError("key '" + std::string(key) + "' names '" + part +
                       "', which is not in the frame");
    }
    const FocalSet single = FocalSet::singleton(*index);
    if (set.contains(single)) {
      throw InputError("key '" + std::string(key) + "' repeats '" + part + "'");
    }
    set = set | single;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return set;
}

InputDocument parse_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");

  Frame frame = parse_frame(doc);
  if (!doc.contains("sources") || !doc["sources"].is_array()) {
    throw InputError("document needs a \"sources\" array");
  }
  std::vector<SourceSpec> sources;
  const auto& list = doc["sources"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    sources.push_back(parse_source(list[i], frame, i));
  }
  if (sources.empty()) throw InputError("document lists no sources");
  return {std::move(frame), std::move(sources)};
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace pcrfuse::cli
