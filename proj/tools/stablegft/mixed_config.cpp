#include "mixed_config.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace stablegft::cli {

namespace {

std::string scalar_to_string(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
        return buf;
    }
    throw CLI::ConfigError("config: unsupported JSON value type for '" + value.dump() + "'");
}

void flatten(const nlohmann::json& object, const std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : object.items()) {
        if (value.is_object()) {
            std::vector<std::string> deeper = parents;
            deeper.push_back(key);
            flatten(value, deeper, items);
            continue;
        }
        CLI::ConfigItem item;
        item.parents = parents;
        item.name = key;
        if (value.is_array()) {
            for (const auto& element : value) item.inputs.push_back(scalar_to_string(element));
        } else {
            item.inputs.push_back(scalar_to_string(value));
        }
        items.push_back(std::move(item));
    }
}

}  // namespace

std::vector<CLI::ConfigItem> MixedConfig::from_config(std::istream& input) const {
    std::istream::int_type c = input.peek();
    while (c != std::istream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c))) {
        input.get();
        c = input.peek();
    }
    if (c != '{') return CLI::ConfigTOML::from_config(input);

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        throw CLI::ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw CLI::ConfigError("config: JSON root must be an object");

    std::vector<CLI::ConfigItem> items;
    flatten(parsed, {}, items);
    return items;
}

}  // namespace stablegft::cli
