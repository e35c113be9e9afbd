#pragma once

// Validator for the JSON Schema subset used by docs/api-schema.json:
// $ref (local), type, enum, required, properties, items, minItems, maxItems,
// minimum, maximum, oneOf.

#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

namespace trinim::schema {

using nlohmann::json;

inline const json& load() {
  static const json schema = [] {
    std::ifstream in(std::string(TRINIM_SOURCE_DIR) + "/docs/api-schema.json");
    return json::parse(in);
  }();
  return schema;
}

inline bool type_matches(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline void validate(const json& v, const json& s, const std::string& path,
                     std::vector<std::string>& errors) {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"];
    const std::string prefix = "#/$defs/";
    validate(v, load()["$defs"][ref.substr(prefix.size())], path, errors);
    return;
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || type_matches(v, t);
    } else {
      ok = type_matches(v, s["type"]);
    }
    if (!ok) {
      errors.push_back(path + ": wrong type " + v.dump());
      return;
    }
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": " + v.dump() + " not in enum");
  }
  if (s.contains("oneOf")) {
    int matches = 0;
    for (const auto& alt : s["oneOf"]) {
      std::vector<std::string> sub;
      validate(v, alt, path, sub);
      matches += sub.empty();
    }
    if (matches != 1) errors.push_back(path + ": matches " + std::to_string(matches) + " oneOf");
  }
  if (v.is_number() && s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (v.is_number() && s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) {
    errors.push_back(path + ": above maximum");
  }
  if (v.is_object()) {
    for (const auto& key : s.value("required", json::array())) {
      if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.dump());
    }
    if (s.contains("properties")) {
      for (const auto& [key, sub] : s["properties"].items()) {
        if (v.contains(key)) validate(v[key], sub, path + "." + key, errors);
      }
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
      errors.push_back(path + ": too few items");
    }
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) {
      errors.push_back(path + ": too many items");
    }
    if (s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        validate(v[i], s["items"], path + "[" + std::to_string(i) + "]", errors);
      }
    }
  }
}

/// Errors from validating `value` against $defs/<def>; empty when valid.
inline std::vector<std::string> check(const json& value, const std::string& def) {
  std::vector<std::string> errors;
  validate(value, load()["$defs"][def], "$", errors);
  return errors;
}

}  // namespace trinim::schema
