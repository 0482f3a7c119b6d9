#include "pslet/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace pslet {

namespace {

constexpr const char* kShellLetters = "spdfghik";
constexpr int kShellLetterCount = 8;

int shell_index(char letter)
{
    for (int i = 0; i < kShellLetterCount; ++i)
        if (kShellLetters[i] == letter) return i;
    return -1;
}

} // namespace

std::string StateLabel::name() const
{
    std::string out = family();
    if (m > 0) out += '+';
    if (m < 0) out += '-';
    return out;
}

std::string StateLabel::family() const
{
    const int lq = l();
    if (lq >= kShellLetterCount)
        throw DomainError("StateLabel: no spectroscopic letter for |m| = " + std::to_string(lq));
    std::string out = std::to_string(principal());
    out += kShellLetters[lq];
    return out;
}

StateLabel StateLabel::parse(const std::string& text)
{
    std::string t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.empty()) throw DomainError("StateLabel: empty state name");

    const auto comma = t.find(',');
    if (comma != std::string::npos) {
        try {
            const int n = std::stoi(t.substr(0, comma));
            const int m = std::stoi(t.substr(comma + 1));
            return StateLabel(n, m);
        } catch (const std::logic_error&) {
            throw DomainError("StateLabel: cannot parse pair '" + text + "'");
        }
    }

    size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == 0 || i >= t.size())
        throw DomainError("StateLabel: cannot parse '" + text + "'");
    const int principal = std::stoi(t.substr(0, i));
    const int lq = shell_index(t[i]);
    if (lq < 0)
        throw DomainError("StateLabel: unknown shell letter in '" + text + "'");
    ++i;
    int sign = 1;
    if (i < t.size()) {
        if (t[i] == '+')
            sign = 1;
        else if (t[i] == '-')
            sign = -1;
        else
            throw DomainError("StateLabel: unexpected suffix in '" + text + "'");
        ++i;
    }
    if (i != t.size())
        throw DomainError("StateLabel: trailing characters in '" + text + "'");

    const int n_rho = principal - lq - 1;
    if (n_rho < 0)
        throw DomainError("StateLabel: '" + text + "' implies a negative node count");
    if (lq == 0 && sign < 0)
        throw DomainError("StateLabel: s states carry m = 0, no sign suffix");
    return StateLabel(n_rho, sign * lq);
}

std::string method_name(Method m, int numer_degree, int denom_degree)
{
    switch (m) {
        case Method::pade:
            return "pade" + std::to_string(numer_degree) + std::to_string(denom_degree);
        case Method::truncated_sum:
            return "truncated_sum";
        case Method::exact_limit:
            return "exact_limit";
    }
    return "unknown";
}

double exact_coulomb(const StateLabel& s)
{
    const double n_eff = s.n_rho + s.l() + 0.5;
    return -1.0 / (n_eff * n_eff);
}

double exact_landau(const StateLabel& s, double gamma)
{
    if (!(gamma > 0.0))
        throw DomainError("exact_landau: gamma must be > 0");
    return (2 * s.n_rho + s.l() + 1) * gamma;
}

SpectrumPoint epsilon_pslet(const DonorPotential& p, const StateLabel& s,
                            const SpectrumOptions& opts)
{
    SpectrumPoint pt;
    pt.state = s;
    pt.gamma = p.gamma;
    pt.w = p.w;

    if (opts.allow_exact_shortcut && (p.gamma == 0.0 || p.w == 0)) {
        pt.method = Method::exact_limit;
        pt.epsilon = p.gamma == 0.0 ? exact_coulomb(s) : exact_landau(s, p.gamma);
        return pt;
    }

    const std::string ctx = "state " + s.name() + " at gamma = " + std::to_string(p.gamma) + ": ";
    try {
        const PlateauGeometry g = solve_plateau(p, s.n_rho, s.l(), opts.plateau);
        const HierarchyResult hr = solve_hierarchy(p, g, s.n_rho, opts.series);
        const EnergySeries& es = hr.energies;

        pt.diagnostics.e_minus1 = es.e_minus1;
        pt.diagnostics.max_residual = 0.0;
        for (const double r : es.residual_per_order)
            pt.diagnostics.max_residual = std::max(pt.diagnostics.max_residual, r);

        const RationalApproximant r = pade_from_series(es.e_n, opts.pade_numer_degree,
                                                       opts.pade_denom_degree, opts.pade);
        pt.diagnostics.pade_condition_flag = r.condition_flag;

        const double truncated = es.truncated_sum(g.l_tilde);
        if (r.condition_flag) {
            pt.epsilon = truncated;
            pt.method = Method::truncated_sum;
        } else {
            try {
                pt.epsilon = assemble_epsilon(g, es, r, opts.pade);
                pt.method = Method::pade;
                pt.diagnostics.pade_truncated_delta = std::fabs(pt.epsilon - truncated);
            } catch (const PadePoleError&) {
                pt.diagnostics.pade_pole_flag = true;
                pt.epsilon = truncated;
                pt.method = Method::truncated_sum;
            }
        }
        return pt;
    } catch (const BracketingError& e) {
        throw BracketingError(ctx + e.what());
    } catch (const HierarchyError& e) {
        throw HierarchyError(ctx + e.what(), e.half_order(), e.power());
    } catch (const ConfigError& e) {
        throw ConfigError(ctx + e.what());
    } catch (const DomainError& e) {
        throw DomainError(ctx + e.what());
    }
}

double SweepResult::reported(size_t i) const
{
    return include_zeeman ? points[i].energy() : points[i].epsilon;
}

SweepResult sweep(int w, const StateLabel& s, const std::vector<double>& grid,
                  bool include_zeeman, const SpectrumOptions& opts)
{
    if (grid.empty())
        throw DomainError("sweep: empty gamma grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0))
            throw DomainError("sweep: gamma grid entries must be >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("sweep: gamma grid must be strictly increasing");
    }

    SweepResult sr;
    sr.state = s;
    sr.w = w;
    sr.include_zeeman = include_zeeman;
    sr.grid = grid;
    sr.points.reserve(grid.size());
    sr.errors.reserve(grid.size());

    for (const double gamma : grid) {
        try {
            const DonorPotential p(gamma, w);
            sr.points.push_back(epsilon_pslet(p, s, opts));
            sr.errors.emplace_back();
        } catch (const Error& e) {
            SpectrumPoint bad;
            bad.state = s;
            bad.gamma = gamma;
            bad.w = w;
            bad.epsilon = std::nan("");
            sr.points.push_back(bad);
            sr.errors.emplace_back(e.what());
        }
    }
    return sr;
}

namespace {

double zeeman_energy(int w, const StateLabel& s, double gamma, const SpectrumOptions& opts)
{
    const DonorPotential p(gamma, w);
    return epsilon_pslet(p, s, opts).energy();
}

} // namespace

std::vector<Crossing> find_crossing(const SweepResult& a, const SweepResult& b,
                                    const SpectrumOptions& opts)
{
    if (a.grid != b.grid)
        throw GridError("find_crossing: sweeps use different gamma grids");
    if (a.w != b.w)
        throw GridError("find_crossing: sweeps use different potentials");
    if (!a.include_zeeman || !b.include_zeeman)
        throw DomainError("find_crossing: crossings are defined on Zeeman-inclusive energies");

    std::vector<Crossing> crossings;
    const auto diff_at = [&](double gamma) {
        return zeeman_energy(a.w, a.state, gamma, opts) - zeeman_energy(b.w, b.state, gamma, opts);
    };

    for (size_t i = 0; i + 1 < a.grid.size(); ++i) {
        if (!a.ok(i) || !a.ok(i + 1) || !b.ok(i) || !b.ok(i + 1)) continue;
        const double d0 = a.points[i].energy() - b.points[i].energy();
        const double d1 = a.points[i + 1].energy() - b.points[i + 1].energy();
        if (d0 == 0.0) {
            crossings.push_back({a.grid[i], a.points[i].energy()});
            continue;
        }
        if ((d0 < 0.0) == (d1 < 0.0)) continue;

        double lo = a.grid[i];
        double hi = a.grid[i + 1];
        double dlo = d0;
        double mid = 0.5 * (lo + hi);
        for (int iter = 0; iter < 100; ++iter) {
            mid = 0.5 * (lo + hi);
            const double dm = diff_at(mid);
            if (std::fabs(dm) < 1e-8 || hi - lo < 1e-13) break;
            if ((dm < 0.0) == (dlo < 0.0)) {
                lo = mid;
                dlo = dm;
            } else {
                hi = mid;
            }
        }
        const double ea = zeeman_energy(a.w, a.state, mid, opts);
        const double eb = zeeman_energy(b.w, b.state, mid, opts);
        crossings.push_back({mid, 0.5 * (ea + eb)});
    }
    return crossings;
}

std::optional<Minimum> find_minimum(const SweepResult& sr, const SpectrumOptions& opts)
{
    if (!sr.include_zeeman)
        throw DomainError("find_minimum: minima are defined on Zeeman-inclusive sweeps");

    size_t best = 0;
    bool have = false;
    for (size_t i = 0; i < sr.grid.size(); ++i) {
        if (!sr.ok(i)) continue;
        if (!have || sr.points[i].energy() < sr.points[best].energy()) {
            best = i;
            have = true;
        }
    }
    if (!have || best == 0 || best + 1 == sr.grid.size()) return std::nullopt;
    if (!sr.ok(best - 1) || !sr.ok(best + 1)) return std::nullopt;

    const auto energy_at = [&](double gamma) { return zeeman_energy(sr.w, sr.state, gamma, opts); };

    // Golden-section refinement between the grid neighbors of the discrete
    // minimum.
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = sr.grid[best - 1];
    double hi = sr.grid[best + 1];
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = energy_at(x1);
    double f2 = energy_at(x2);
    while (hi - lo > 1e-6) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = energy_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = energy_at(x2);
        }
    }
    const double gamma_min = 0.5 * (lo + hi);
    return Minimum{gamma_min, energy_at(gamma_min)};
}

std::vector<StateLabel> landau_ordering(int w, double gamma, std::vector<StateLabel> states,
                                        const SpectrumOptions& opts)
{
    std::vector<double> energy(states.size());
    for (size_t i = 0; i < states.size(); ++i)
        energy[i] = zeeman_energy(w, states[i], gamma, opts);

    std::vector<size_t> index(states.size());
    for (size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::stable_sort(index.begin(), index.end(),
                     [&](size_t x, size_t y) { return energy[x] < energy[y]; });

    std::vector<StateLabel> ordered;
    ordered.reserve(states.size());
    for (const size_t i : index) ordered.push_back(states[i]);
    return ordered;
}

} // namespace pslet
