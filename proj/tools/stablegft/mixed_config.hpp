#pragma once

#include <istream>
#include <vector>

#include <CLI11.hpp>

namespace stablegft::cli {

/// Config-file reader accepting two syntaxes: TOML through the inherited
/// reader, or a JSON object when the first non-space byte is '{'. JSON keys
/// map to long option names without dashes; an object-valued key becomes
/// that subcommand's section; arrays feed multi-value options.
class MixedConfig : public CLI::ConfigTOML {
public:
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace stablegft::cli
