#include "hcrag/graph/property_value.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcrag/common/errors.hpp"

namespace hcrag::graph {

using nlohmann::json;

std::string property_type_name(const PropertyValue& value) {
    switch (value.index()) {
        case 0: return "text";
        case 1: return "integer";
        case 2: return "float";
        case 3: return "boolean";
        case 4: return "list";
    }
    return "unknown";
}

std::string property_to_display(const PropertyValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return json(v).dump();
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                std::ostringstream out;
                out << '[';
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out << ", ";
                    out << v[i];
                }
                out << ']';
                return out.str();
            }
        },
        value);
}

json property_to_json(const PropertyValue& value) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return json{{"t", "s"}, {"v", v}};
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return json{{"t", "i"}, {"v", v}};
            } else if constexpr (std::is_same_v<T, double>) {
                return json{{"t", "f"}, {"v", v}};
            } else if constexpr (std::is_same_v<T, bool>) {
                return json{{"t", "b"}, {"v", v}};
            } else {
                return json{{"t", "ls"}, {"v", v}};
            }
        },
        value);
}

PropertyValue property_from_json(const json& tagged) {
    if (!tagged.is_object() || !tagged.contains("t") || !tagged.contains("v")) {
        throw ValidationError("malformed tagged property value: " + tagged.dump());
    }
    const std::string tag = tagged.at("t").get<std::string>();
    const json& v = tagged.at("v");
    if (tag == "s") return v.get<std::string>();
    if (tag == "i") return v.get<std::int64_t>();
    if (tag == "f") return v.get<double>();
    if (tag == "b") return v.get<bool>();
    if (tag == "ls") return v.get<std::vector<std::string>>();
    throw ValidationError("unknown property value tag '" + tag + "'");
}

PropertyValue property_from_untyped_json(const json& value) {
    switch (value.type()) {
        case json::value_t::string:
            return value.get<std::string>();
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
            return value.get<std::int64_t>();
        case json::value_t::number_float:
            return value.get<double>();
        case json::value_t::boolean:
            return value.get<bool>();
        case json::value_t::array: {
            std::vector<std::string> items;
            items.reserve(value.size());
            for (const auto& item : value) {
                if (!item.is_string()) {
                    throw ValidationError(
                        "property lists may only contain text, got element of type " +
                        std::string(item.type_name()));
                }
                items.push_back(item.get<std::string>());
            }
            return items;
        }
        default:
            throw ValidationError("property values must be flat key-value data, got " +
                                  std::string(value.type_name()));
    }
}

bool property_equals(const PropertyValue& a, const PropertyValue& b) {
    // Integers and floats compare numerically across the two variants.
    const bool a_num = a.index() == 1 || a.index() == 2;
    const bool b_num = b.index() == 1 || b.index() == 2;
    if (a_num && b_num && a.index() != b.index()) {
        const double av = a.index() == 1 ? static_cast<double>(std::get<std::int64_t>(a))
                                         : std::get<double>(a);
        const double bv = b.index() == 1 ? static_cast<double>(std::get<std::int64_t>(b))
                                         : std::get<double>(b);
        return av == bv;
    }
    return a == b;
}

}  // namespace hcrag::graph
