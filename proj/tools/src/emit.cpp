#include "pslet_cli/emit.hpp"

#include <cstdio>

namespace pslet_cli {

std::string format_sig12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string render_cell(const nlohmann::json& cell)
{
    if (cell.is_null()) return "";
    if (cell.is_boolean()) return cell.get<bool>() ? "1" : "0";
    if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
    if (cell.is_number_float()) return format_sig12(cell.get<double>());
    if (cell.is_string()) return cell.get<std::string>();
    return cell.dump();
}

} // namespace

std::string render(const OutputTable& table, OutputFormat format)
{
    if (format == OutputFormat::json) return table.rows.dump(2) + "\n";

    std::string out;
    if (!table.csv_comment.empty()) {
        out += "# " + table.csv_comment + "\n";
    }
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            const auto it = row.find(table.columns[c]);
            if (it != row.end()) out += render_cell(*it);
        }
        out += '\n';
    }
    return out;
}

} // namespace pslet_cli
