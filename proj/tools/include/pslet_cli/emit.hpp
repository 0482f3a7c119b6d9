#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pslet_cli/run_config.hpp"

namespace pslet_cli {

/// Ordered columns plus rows of JSON objects; the renderer turns this into
/// CSV (12 significant digits, LF endings) or a JSON array.
struct OutputTable {
    std::vector<std::string> columns;
    nlohmann::json rows = nlohmann::json::array();
    std::string csv_comment; ///< optional '#' line placed above the header
};

/// Fixed 12-significant-digit rendering used for every CSV number.
std::string format_sig12(double v);

std::string render(const OutputTable& table, OutputFormat format);

} // namespace pslet_cli
