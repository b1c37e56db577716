#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hcrag::graph {

// Flat property value: text, integer, float, boolean, or list of text.
// Nested maps and lists of lists are rejected at conversion time.
using PropertyValue =
    std::variant<std::string, std::int64_t, double, bool, std::vector<std::string>>;

using PropertyMap = std::map<std::string, PropertyValue>;

// Human-readable type names used in diagnostics.
std::string property_type_name(const PropertyValue& value);

// Renders a value for result tables and context strings. Lists render as
// [a, b, c]; floats with shortest round-trip formatting.
std::string property_to_display(const PropertyValue& value);

// Tagged JSON encoding that round-trips the variant exactly:
// {"t":"s"|"i"|"f"|"b"|"ls","v":...}
nlohmann::json property_to_json(const PropertyValue& value);
PropertyValue property_from_json(const nlohmann::json& tagged);

// Converts untyped JSON (as produced by a model or an ingest file) into a
// PropertyValue. Objects, arrays with non-string elements, and null are
// rejected with ValidationError.
PropertyValue property_from_untyped_json(const nlohmann::json& value);

bool property_equals(const PropertyValue& a, const PropertyValue& b);

}  // namespace hcrag::graph
