#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relsig/dependent.hpp"
#include "relsig/errors.hpp"
#include "relsig/rational.hpp"
#include "relsig/structure.hpp"

namespace relsig {

// Reports use insertion order so output is byte-stable across runs.
using ordered_json = nlohmann::ordered_json;

namespace io_detail {

inline ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann's message already carries line/column information.
    throw ParseError(e.what());
  }
}

inline int get_component_count(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("document must carry an integer \"n\"");
  const long long n = doc["n"].get<long long>();
  if (n < 1) throw ParseError("\"n\" must be at least 1");
  if (n > kMaxTableComponents)
    throw CapError("component count " + std::to_string(n) + " exceeds the cap of " +
                   std::to_string(kMaxTableComponents));
  return static_cast<int>(n);
}

inline Rational rational_field(const ordered_json& value, const char* where) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string())
    throw ParseError(std::string(where) + ": rationals must be strings like \"3/5\"");
  return parse_rational(value.get<std::string>());
}

}  // namespace io_detail

// "1,2,4" -> mask; "" is the empty set.
inline SubsetMask parse_subset_key(const std::string& key, int n) {
  SubsetMask mask = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos) next = key.size();
    const std::string part = key.substr(pos, next - pos);
    if (part.empty()) throw ParseError("bad subset key \"" + key + "\"");
    int component = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw ParseError("bad subset key \"" + key + "\"");
      component = component * 10 + (c - '0');
      if (component > kMaxTableComponents) throw ParseError("bad subset key \"" + key + "\"");
    }
    if (component < 1 || component > n)
      throw ParseError("component index " + std::to_string(component) + " out of range 1.." +
                       std::to_string(n));
    const SubsetMask bit = SubsetMask(1) << (component - 1);
    if (mask & bit) throw ParseError("duplicate component in subset key \"" + key + "\"");
    mask |= bit;
    pos = next + 1;
  }
  return mask;
}

inline std::string subset_key(SubsetMask mask) {
  std::string key;
  for (int component : mask_components(mask)) {
    if (!key.empty()) key += ',';
    key += std::to_string(component);
  }
  return key;
}

// {"n": ..., "pathsets": [[1,4],[2,5],...]}
inline PathSetSpec parse_pathset_spec(const std::string& text) {
  const ordered_json doc = io_detail::parse_json(text);
  const int n = io_detail::get_component_count(doc);
  if (!doc.contains("pathsets")) throw ParseError("document must carry \"pathsets\"");
  const auto& sets = doc["pathsets"];
  if (!sets.is_array()) throw ParseError("\"pathsets\" must be an array of component lists");
  std::vector<std::vector<int>> lists;
  for (const auto& set : sets) {
    if (!set.is_array()) throw ParseError("each path set must be an array of component indices");
    std::vector<int> list;
    for (const auto& component : set) {
      if (!component.is_number_integer())
        throw ParseError("component indices must be integers");
      list.push_back(component.get<int>());
    }
    lists.push_back(std::move(list));
  }
  return make_pathset_spec(n, lists);
}

struct SystemDocument {
  StructureFunction structure;
  std::optional<PathSetSpec> path_sets;
};

// Either {"n", "pathsets"} or {"n", "table"}; exactly one of the two.
inline SystemDocument parse_system_document(const std::string& text) {
  const ordered_json doc = io_detail::parse_json(text);
  const int n = io_detail::get_component_count(doc);
  const bool has_pathsets = doc.contains("pathsets");
  const bool has_table = doc.contains("table");
  if (has_pathsets == has_table)
    throw ParseError("document must carry exactly one of \"pathsets\" and \"table\"");
  if (has_pathsets) {
    PathSetSpec spec = parse_pathset_spec(text);
    StructureFunction structure = structure_from_pathsets(spec);
    return SystemDocument{std::move(structure), std::move(spec)};
  }
  if (!doc["table"].is_string()) throw ParseError("\"table\" must be a string of 0/1 characters");
  const std::string bits = doc["table"].get<std::string>();
  if (bits.size() != (std::size_t(1) << n))
    throw ParseError("\"table\" must have exactly 2^n characters");
  std::vector<bool> table(bits.size());
  for (std::size_t mask = 0; mask < bits.size(); ++mask) {
    if (bits[mask] != '0' && bits[mask] != '1')
      throw ParseError("\"table\" must contain only 0 and 1");
    table[mask] = bits[mask] == '1';
  }
  return SystemDocument{StructureFunction(n, std::move(table)), std::nullopt};
}

using QualityInput = std::variant<RelativeQuality, OrderDistribution>;

// Either {"n", "q": {"<subset key>": "<rational>", ...}} with absent subsets
// defaulting to 0, or {"n", "orders": [{"perm": [...], "prob": "<rational>"}]}.
inline QualityInput parse_quality_document(const std::string& text) {
  const ordered_json doc = io_detail::parse_json(text);
  const int n = io_detail::get_component_count(doc);
  if (n > kMaxQualityComponents)
    throw CapError("component count " + std::to_string(n) +
                   " exceeds the dependent-case cap of " + std::to_string(kMaxQualityComponents));
  const bool has_q = doc.contains("q");
  const bool has_orders = doc.contains("orders");
  if (has_q == has_orders)
    throw ParseError("document must carry exactly one of \"q\" and \"orders\"");
  if (has_q) {
    if (!doc["q"].is_object()) throw ParseError("\"q\" must map subset keys to rationals");
    std::vector<Rational> q(std::size_t(1) << n);
    for (const auto& [key, value] : doc["q"].items())
      q[parse_subset_key(key, n)] = io_detail::rational_field(value, "\"q\"");
    return RelativeQuality(n, std::move(q));
  }
  if (!doc["orders"].is_array()) throw ParseError("\"orders\" must be an array");
  std::vector<std::pair<std::vector<int>, Rational>> entries;
  for (const auto& entry : doc["orders"]) {
    if (!entry.is_object() || !entry.contains("perm") || !entry.contains("prob"))
      throw ParseError("each order needs \"perm\" and \"prob\"");
    if (!entry["perm"].is_array()) throw ParseError("\"perm\" must be an array");
    std::vector<int> perm;
    for (const auto& component : entry["perm"]) {
      if (!component.is_number_integer()) throw ParseError("\"perm\" entries must be integers");
      perm.push_back(component.get<int>());
    }
    entries.emplace_back(std::move(perm), io_detail::rational_field(entry["prob"], "\"prob\""));
  }
  return OrderDistribution(n, std::move(entries));
}

struct VectorDocument {
  int n = 0;
  std::optional<std::string> kind;
  std::vector<Rational> values;
};

// {"n": ..., "values": ["0", "1/5", ...]} with an optional "kind" tag.
inline VectorDocument parse_vector_document(const std::string& text) {
  const ordered_json doc = io_detail::parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("document must carry an integer \"n\"");
  VectorDocument out;
  const long long n = doc["n"].get<long long>();
  if (n < 1) throw ParseError("\"n\" must be at least 1");
  out.n = static_cast<int>(n);
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ParseError("\"kind\" must be a string");
    out.kind = doc["kind"].get<std::string>();
  }
  if (!doc.contains("values") || !doc["values"].is_array())
    throw ParseError("document must carry a \"values\" array");
  for (const auto& value : doc["values"])
    out.values.push_back(io_detail::rational_field(value, "\"values\""));
  return out;
}

inline ordered_json rational_strings(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& value : values) out.push_back(to_string(value));
  return out;
}

inline ordered_json rational_strings(const std::vector<Int>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& value : values) out.push_back(to_string(value));
  return out;
}

}  // namespace relsig
