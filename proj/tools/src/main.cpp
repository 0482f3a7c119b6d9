#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pslet/errors.hpp"
#include "pslet/series.hpp"
#include "pslet_cli/run_config.hpp"
#include "pslet_cli/runner.hpp"

namespace {

struct RawArgs {
    std::vector<std::string> states;
    std::string gamma;
    int w = 1;
    std::string zeeman;
    std::vector<int> pade;
    int order = 8;
    std::string format = "csv";
    std::string output = "-";
};

// PSLET_EXTENDED_PRECISION=0/1 overrides the built-in default.
bool env_extended_precision(bool fallback)
{
    const char* v = std::getenv("PSLET_EXTENDED_PRECISION");
    if (!v) return fallback;
    const std::string s(v);
    if (s == "0" || s == "false" || s == "off") return false;
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bound states of a 2D hydrogenic donor in a perpendicular magnetic field:\n"
                 "shifted-expansion eigenvalues with rational resummation, exact limits,\n"
                 "level crossings and a shooting-method reference solver."};
    app.require_subcommand(1);

    RawArgs raw;

    const auto add_common = [&](CLI::App* sub, bool with_states) {
        if (with_states)
            sub->add_option("--state", raw.states,
                            "state name (1s, 2p-, 3d+) or n_rho,m pair; repeatable")
                ->required();
        sub->add_option("--gamma", raw.gamma, "field value or start:stop:steps grid")->required();
        sub->add_option("--w", raw.w, "Coulomb switch (0 or 1)")->check(CLI::Range(0, 1));
        sub->add_option("--zeeman", raw.zeeman, "include|exclude the m*gamma term")
            ->check(CLI::IsMember({"include", "exclude"}));
        sub->add_option("--pade", raw.pade, "numerator and denominator degrees")
            ->expected(2);
        sub->add_option("--order", raw.order, "energy series truncation order")
            ->check(CLI::Range(0, 10));
        sub->add_option("--format", raw.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", raw.output, "output path, '-' for stdout");
        return sub;
    };

    add_common(app.add_subcommand("energy", "eigenvalues at single field points"), true);
    add_common(app.add_subcommand("sweep", "states across a field grid, one column each"), true);
    add_common(app.add_subcommand("table", "the seven reference states across a field grid"),
               false);
    add_common(app.add_subcommand("crossings", "level crossings of two states"), true);
    add_common(app.add_subcommand("minima", "interior energy minima along the field grid"), true);
    add_common(app.add_subcommand("oracle", "shooting-method reference eigenvalues"), true);
    add_common(app.add_subcommand("compare", "series solver against the shooting reference"),
               true);
    add_common(app.add_subcommand("convergence", "series coefficients and diagnostics"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    pslet_cli::RunConfig cfg;
    try {
        using pslet_cli::Command;
        if (app.got_subcommand("energy")) cfg.command = Command::energy;
        else if (app.got_subcommand("sweep")) cfg.command = Command::sweep;
        else if (app.got_subcommand("table")) cfg.command = Command::table;
        else if (app.got_subcommand("crossings")) cfg.command = Command::crossings;
        else if (app.got_subcommand("minima")) cfg.command = Command::minima;
        else if (app.got_subcommand("oracle")) cfg.command = Command::oracle;
        else if (app.got_subcommand("compare")) cfg.command = Command::compare;
        else cfg.command = Command::convergence;

        const bool zeeman_required =
            cfg.command == Command::crossings || cfg.command == Command::minima;
        if (raw.zeeman.empty())
            cfg.include_zeeman = zeeman_required;
        else
            cfg.include_zeeman = raw.zeeman == "include";
        if (zeeman_required && !cfg.include_zeeman)
            throw pslet::DomainError("this command is defined on Zeeman-inclusive energies");

        if (!raw.states.empty()) cfg.states = pslet_cli::parse_states(raw.states);
        cfg.gamma_grid = pslet_cli::parse_gamma_grid(raw.gamma);
        cfg.w = raw.w;
        if (!raw.pade.empty()) {
            cfg.pade_numer = raw.pade[0];
            cfg.pade_denom = raw.pade[1];
            if (cfg.pade_numer < 0 || cfg.pade_denom < 0)
                throw pslet::DomainError("pade degrees must be non-negative");
        }
        cfg.order = raw.order;
        cfg.format = raw.format == "json" ? pslet_cli::OutputFormat::json
                                          : pslet_cli::OutputFormat::csv;
        cfg.output = raw.output;
        cfg.extended_precision = env_extended_precision(pslet::SeriesOptions{}.extended_precision);
    } catch (const pslet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const pslet_cli::RunResult result = pslet_cli::run(cfg);
        if (cfg.output == "-") {
            std::cout << result.rendered;
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.output << "\n";
                return 1;
            }
            out << result.rendered;
        }
        return result.exit_code;
    } catch (const pslet::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pslet::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pslet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
