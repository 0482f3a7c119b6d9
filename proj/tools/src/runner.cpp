#include "pslet_cli/runner.hpp"

#include <cmath>
#include <map>

#include "pslet/oracle.hpp"
#include "pslet/spectrum.hpp"
#include "pslet_cli/emit.hpp"

namespace pslet_cli {

namespace {

using nlohmann::json;
using namespace pslet;

SpectrumOptions make_options(const RunConfig& cfg)
{
    SpectrumOptions opts;
    opts.pade_numer_degree = cfg.pade_numer;
    opts.pade_denom_degree = cfg.pade_denom;
    opts.series.target_order = cfg.order;
    opts.series.extended_precision = cfg.extended_precision;
    if (cfg.pade_numer + cfg.pade_denom > cfg.order)
        throw ConfigError("pade degrees need series coefficients beyond the requested order");
    return opts;
}

std::string method_string(const SpectrumPoint& pt, const RunConfig& cfg)
{
    return method_name(pt.method, cfg.pade_numer, cfg.pade_denom);
}

// The seven families rendered by `table`, in presentation order.
const std::vector<std::string> kTableFamilies = {"1s", "2p", "2s", "3d", "3p", "3s", "4d"};

struct WideColumn {
    std::string name;
    StateLabel state;
};

std::vector<WideColumn> wide_columns(const std::vector<StateLabel>& states, bool include_zeeman,
                                     bool from_families)
{
    std::vector<WideColumn> cols;
    for (const auto& s : states) {
        if (!include_zeeman) {
            // epsilon depends on |m| only; report the family.
            cols.push_back({s.family(), s});
        } else if (s.m == 0 || !from_families) {
            cols.push_back({s.name(), s});
        } else {
            // Zeeman splits each family into its -|m| and +|m| members.
            cols.push_back({StateLabel(s.n_rho, -s.l()).name(), StateLabel(s.n_rho, -s.l())});
            cols.push_back({StateLabel(s.n_rho, s.l()).name(), StateLabel(s.n_rho, s.l())});
        }
    }
    return cols;
}

RunResult render_result(const OutputTable& table, OutputFormat format, int exit_code)
{
    return {exit_code, render(table, format)};
}

// `table` and `sweep`: gamma rows against one value column per state.
RunResult run_wide(const RunConfig& cfg, const std::vector<StateLabel>& states, bool from_families)
{
    const SpectrumOptions opts = make_options(cfg);
    const auto cols = wide_columns(states, cfg.include_zeeman, from_families);

    OutputTable table;
    table.columns.push_back("gamma");
    for (const auto& c : cols) table.columns.push_back(c.name);

    int exit_code = 0;
    for (const double gamma : cfg.gamma_grid) {
        json row;
        row["gamma"] = gamma;
        for (const auto& c : cols) {
            try {
                const DonorPotential p(gamma, cfg.w);
                const SpectrumPoint pt = epsilon_pslet(p, c.state, opts);
                row[c.name] = cfg.include_zeeman ? pt.energy() : pt.epsilon;
            } catch (const Error&) {
                row[c.name] = std::nan("");
                exit_code = 1;
            }
        }
        table.rows.push_back(std::move(row));
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_energy(const RunConfig& cfg)
{
    const SpectrumOptions opts = make_options(cfg);
    OutputTable table;
    table.columns = {"state", "n_rho", "m",      "gamma", "w",
                     "epsilon", "energy", "method", "error"};
    int exit_code = 0;
    for (const double gamma : cfg.gamma_grid) {
        for (const auto& s : cfg.states) {
            json row;
            row["state"] = s.name();
            row["n_rho"] = s.n_rho;
            row["m"] = s.m;
            row["gamma"] = gamma;
            row["w"] = cfg.w;
            try {
                const DonorPotential p(gamma, cfg.w);
                const SpectrumPoint pt = epsilon_pslet(p, s, opts);
                row["epsilon"] = pt.epsilon;
                row["energy"] = pt.energy();
                row["method"] = method_string(pt, cfg);
                row["error"] = "";
            } catch (const Error& e) {
                row["epsilon"] = nullptr;
                row["energy"] = nullptr;
                row["method"] = nullptr;
                row["error"] = std::string(e.what());
                exit_code = 1;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_crossings(const RunConfig& cfg)
{
    if (cfg.states.size() != 2)
        throw DomainError("crossings needs exactly two states");
    const SpectrumOptions opts = make_options(cfg);

    const SweepResult a = sweep(cfg.w, cfg.states[0], cfg.gamma_grid, true, opts);
    const SweepResult b = sweep(cfg.w, cfg.states[1], cfg.gamma_grid, true, opts);

    OutputTable table;
    table.columns = {"state_a", "state_b", "gamma", "energy"};
    int exit_code = 0;
    for (size_t i = 0; i < a.grid.size(); ++i)
        if (!a.ok(i) || !b.ok(i)) exit_code = 1;

    for (const Crossing& c : find_crossing(a, b, opts)) {
        json row;
        row["state_a"] = cfg.states[0].name();
        row["state_b"] = cfg.states[1].name();
        row["gamma"] = c.gamma;
        row["energy"] = c.energy;
        table.rows.push_back(std::move(row));
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_minima(const RunConfig& cfg)
{
    const SpectrumOptions opts = make_options(cfg);
    OutputTable table;
    table.columns = {"state", "found", "gamma", "energy"};
    int exit_code = 0;
    for (const auto& s : cfg.states) {
        const SweepResult sr = sweep(cfg.w, s, cfg.gamma_grid, true, opts);
        for (size_t i = 0; i < sr.grid.size(); ++i)
            if (!sr.ok(i)) exit_code = 1;
        const auto minimum = find_minimum(sr, opts);
        json row;
        row["state"] = s.name();
        row["found"] = minimum.has_value();
        if (minimum) {
            row["gamma"] = minimum->gamma;
            row["energy"] = minimum->energy;
        } else {
            row["gamma"] = nullptr;
            row["energy"] = nullptr;
        }
        table.rows.push_back(std::move(row));
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_oracle(const RunConfig& cfg)
{
    OutputTable table;
    table.csv_comment = "oracle-fixture v1";
    table.columns = {"state", "n_rho", "m",       "gamma",   "w",
                     "epsilon", "rho_min", "rho_max", "step_count", "defect", "error"};
    int exit_code = 0;
    for (const double gamma : cfg.gamma_grid) {
        for (const auto& s : cfg.states) {
            json row;
            row["state"] = s.name();
            row["n_rho"] = s.n_rho;
            row["m"] = s.m;
            row["gamma"] = gamma;
            row["w"] = cfg.w;
            try {
                const DonorPotential p(gamma, cfg.w);
                const OracleSolution sol = shoot(p, s);
                row["epsilon"] = sol.epsilon;
                row["rho_min"] = sol.config.rho_min;
                row["rho_max"] = sol.config.rho_max;
                row["step_count"] = sol.config.step_count;
                row["defect"] = sol.match_defect;
                row["error"] = "";
            } catch (const Error& e) {
                row["epsilon"] = nullptr;
                row["rho_min"] = nullptr;
                row["rho_max"] = nullptr;
                row["step_count"] = nullptr;
                row["defect"] = nullptr;
                row["error"] = std::string(e.what());
                exit_code = 1;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_compare(const RunConfig& cfg)
{
    const SpectrumOptions opts = make_options(cfg);
    OutputTable table;
    table.columns = {"state", "n_rho", "m",         "gamma",      "w",
                     "eps_pslet", "eps_oracle", "abs_delta", "method", "error"};
    int exit_code = 0;
    for (const double gamma : cfg.gamma_grid) {
        for (const auto& s : cfg.states) {
            json row;
            row["state"] = s.name();
            row["n_rho"] = s.n_rho;
            row["m"] = s.m;
            row["gamma"] = gamma;
            row["w"] = cfg.w;
            try {
                const DonorPotential p(gamma, cfg.w);
                const SpectrumPoint pt = epsilon_pslet(p, s, opts);
                const OracleSolution sol = shoot(p, s);
                row["eps_pslet"] = pt.epsilon;
                row["eps_oracle"] = sol.epsilon;
                row["abs_delta"] = std::fabs(pt.epsilon - sol.epsilon);
                row["method"] = method_string(pt, cfg);
                row["error"] = "";
            } catch (const Error& e) {
                row["eps_pslet"] = nullptr;
                row["eps_oracle"] = nullptr;
                row["abs_delta"] = nullptr;
                row["method"] = nullptr;
                row["error"] = std::string(e.what());
                exit_code = 1;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return render_result(table, cfg.format, exit_code);
}

RunResult run_convergence(const RunConfig& cfg)
{
    const SpectrumOptions opts = make_options(cfg);
    OutputTable table;
    table.columns = {"state", "gamma", "w", "l_tilde", "rho0", "omega", "beta", "leading"};
    for (int k = 0; k <= cfg.order; ++k) table.columns.push_back("e" + std::to_string(k));
    for (const char* extra : {"eps_truncated", "eps_pade", "method", "max_residual", "e_minus1",
                              "pade_condition", "pade_pole", "error"})
        table.columns.emplace_back(extra);

    int exit_code = 0;
    for (const double gamma : cfg.gamma_grid) {
        for (const auto& s : cfg.states) {
            json row;
            row["state"] = s.name();
            row["gamma"] = gamma;
            row["w"] = cfg.w;
            try {
                const DonorPotential p(gamma, cfg.w);
                SpectrumOptions forced = opts;
                forced.allow_exact_shortcut = false;
                const PlateauGeometry g = solve_plateau(p, s.n_rho, s.l(), forced.plateau);
                const HierarchyResult hr = solve_hierarchy(p, g, s.n_rho, forced.series);
                const SpectrumPoint pt = epsilon_pslet(p, s, forced);

                row["l_tilde"] = g.l_tilde;
                row["rho0"] = g.rho0;
                row["omega"] = g.omega;
                row["beta"] = g.beta;
                row["leading"] = g.leading_energy;
                for (int k = 0; k <= cfg.order; ++k)
                    row["e" + std::to_string(k)] = hr.energies.e_n[static_cast<size_t>(k)];
                row["eps_truncated"] = hr.energies.truncated_sum(g.l_tilde);
                row["eps_pade"] = pt.epsilon;
                row["method"] = method_string(pt, cfg);
                row["max_residual"] = pt.diagnostics.max_residual;
                row["e_minus1"] = hr.energies.e_minus1;
                row["pade_condition"] = pt.diagnostics.pade_condition_flag;
                row["pade_pole"] = pt.diagnostics.pade_pole_flag;
                row["error"] = "";
            } catch (const Error& e) {
                row["error"] = std::string(e.what());
                exit_code = 1;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return render_result(table, cfg.format, exit_code);
}

std::vector<StateLabel> table_states()
{
    std::vector<StateLabel> states;
    for (const auto& name : kTableFamilies) states.push_back(StateLabel::parse(name));
    return states;
}

} // namespace

RunResult run(const RunConfig& cfg)
{
    if (cfg.gamma_grid.empty()) throw DomainError("empty gamma grid");

    switch (cfg.command) {
        case Command::table:
            return run_wide(cfg, table_states(), true);
        case Command::sweep:
            return run_wide(cfg, cfg.states, false);
        case Command::energy:
            return run_energy(cfg);
        case Command::crossings:
            return run_crossings(cfg);
        case Command::minima:
            return run_minima(cfg);
        case Command::oracle:
            return run_oracle(cfg);
        case Command::compare:
            return run_compare(cfg);
        case Command::convergence:
            return run_convergence(cfg);
    }
    throw ConfigError("unknown command");
}

} // namespace pslet_cli
