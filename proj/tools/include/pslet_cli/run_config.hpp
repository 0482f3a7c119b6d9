#pragma once

#include <string>
#include <vector>

#include "pslet/series.hpp"
#include "pslet/state.hpp"

namespace pslet_cli {

enum class Command { energy, sweep, table, crossings, minima, oracle, compare, convergence };

enum class OutputFormat { csv, json };

/// Fully parsed invocation; the runner consumes this and nothing else.
struct RunConfig {
    Command command = Command::energy;
    std::vector<pslet::StateLabel> states;
    std::vector<double> gamma_grid;
    int w = 1;
    bool include_zeeman = false;
    int pade_numer = 4;
    int pade_denom = 4;
    int order = 8;
    OutputFormat format = OutputFormat::csv;
    std::string output = "-"; ///< "-" = standard output
    bool extended_precision = pslet::SeriesOptions{}.extended_precision;
};

/// "start:stop:steps" with steps grid points inclusive, or a bare number.
/// The result is strictly increasing.
std::vector<double> parse_gamma_grid(const std::string& spec);

/// Splits comma-joined entries and parses each state name or pair.
std::vector<pslet::StateLabel> parse_states(const std::vector<std::string>& specs);

} // namespace pslet_cli
