#include "pslet_cli/run_config.hpp"

#include <cmath>
#include <stdexcept>

#include "pslet/errors.hpp"

namespace pslet_cli {

std::vector<double> parse_gamma_grid(const std::string& spec)
{
    const auto bad = [&](const std::string& why) {
        return pslet::DomainError("gamma grid '" + spec + "': " + why);
    };

    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) {
        try {
            size_t used = 0;
            const double v = std::stod(spec, &used);
            if (used != spec.size() || !std::isfinite(v)) throw bad("not a number");
            if (v < 0.0) throw bad("gamma must be >= 0");
            return {v};
        } catch (const std::logic_error&) {
            throw bad("not a number");
        }
    }

    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw bad("expected start:stop:steps");
    double start = 0.0;
    double stop = 0.0;
    long steps = 0;
    try {
        start = std::stod(spec.substr(0, c1));
        stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        steps = std::stol(spec.substr(c2 + 1));
    } catch (const std::logic_error&) {
        throw bad("expected start:stop:steps");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) throw bad("bounds must be finite");
    if (start < 0.0) throw bad("gamma must be >= 0");
    if (steps < 1 || steps > 1000000) throw bad("steps must be in [1, 1e6]");
    if (steps == 1) {
        if (stop != start) throw bad("steps = 1 requires start == stop");
        return {start};
    }
    if (!(stop > start)) throw bad("stop must exceed start");

    std::vector<double> grid(static_cast<size_t>(steps));
    for (long i = 0; i < steps; ++i)
        grid[static_cast<size_t>(i)] = start + (stop - start) * static_cast<double>(i) /
                                                   static_cast<double>(steps - 1);
    grid.back() = stop;
    return grid;
}

std::vector<pslet::StateLabel> parse_states(const std::vector<std::string>& specs)
{
    std::vector<pslet::StateLabel> states;
    for (const auto& spec : specs) {
        size_t begin = 0;
        while (begin <= spec.size()) {
            // Pairs "n,m" contain a comma too: treat "a,b" as a pair when both
            // halves are integers, otherwise split on commas.
            auto end = spec.find(',', begin);
            std::string tok;
            if (end == std::string::npos) {
                tok = spec.substr(begin);
                begin = spec.size() + 1;
            } else {
                tok = spec.substr(begin, end - begin);
                begin = end + 1;
            }
            if (tok.empty()) continue;

            const bool numeric = tok.find_first_not_of("+-0123456789") == std::string::npos;
            if (numeric && begin <= spec.size()) {
                // Re-join with the next token to form "n,m".
                auto end2 = spec.find(',', begin);
                std::string tok2 = end2 == std::string::npos ? spec.substr(begin)
                                                             : spec.substr(begin, end2 - begin);
                states.push_back(pslet::StateLabel::parse(tok + "," + tok2));
                begin = end2 == std::string::npos ? spec.size() + 1 : end2 + 1;
                continue;
            }
            states.push_back(pslet::StateLabel::parse(tok));
        }
    }
    if (states.empty()) throw pslet::DomainError("no states given");
    return states;
}

} // namespace pslet_cli
