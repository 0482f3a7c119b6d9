// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pslet/oracle.hpp"
#include "pslet/pade.hpp"
#include "pslet/spectrum.hpp"

using namespace pslet;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> lines; // extra indented detail

    void fail(const std::string& msg)
    {
        pass = false;
        if (detail.empty()) detail = msg;
    }
};

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::vector<StateLabel> state_block(int max_n_rho, int max_abs_m)
{
    std::vector<StateLabel> states;
    for (int n = 0; n <= max_n_rho; ++n)
        for (int m = -max_abs_m; m <= max_abs_m; ++m) states.emplace_back(n, m);
    return states;
}

std::vector<double> uniform_grid(double lo, double hi, int count)
{
    std::vector<double> g(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return g;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const std::vector<std::string> kFamilies = {"1s", "2p", "2s", "3d", "3p", "3s", "4d"};

SpectrumOptions full_pipeline(bool extended)
{
    SpectrumOptions opts;
    opts.allow_exact_shortcut = false;
    opts.series.extended_precision = extended;
    return opts;
}

// ---------------------------------------------------------------- criteria

Outcome criterion_coulomb_limit(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    const SpectrumOptions opts = full_pipeline(true);
    const DonorPotential p(0.0, 1);

    for (const auto& s : state_block(2, 2)) {
        const double exact = exact_coulomb(s);

        const SpectrumPoint shortcut = epsilon_pslet(p, s);
        if (std::fabs(shortcut.epsilon - exact) > 1e-14)
            out.fail("shortcut value off for " + s.name());

        const PlateauGeometry g = solve_plateau(p, s.n_rho, s.l());
        const HierarchyResult hr = solve_hierarchy(p, g, s.n_rho, opts.series);
        for (const double e : hr.energies.e_n)
            if (std::fabs(e) > 1e-10)
                out.fail(s.name() + ": |E^(n)| = " + fmt(std::fabs(e)) + " > 1e-10");

        const SpectrumPoint pt = epsilon_pslet(p, s, opts);
        if (std::fabs(pt.epsilon - exact) > 1e-10)
            out.fail(s.name() + ": |eps - exact| = " + fmt(std::fabs(pt.epsilon - exact)));
    }

    *seconds = now_seconds() - t0;
    if (*seconds >= 1.0) out.fail("runtime " + fmt(*seconds) + " s >= 1 s");
    if (out.pass) out.detail = "15 states, pipeline error <= 1e-10, corrections <= 1e-10";
    return out;
}

Outcome criterion_landau_limit(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    const SpectrumOptions opts = full_pipeline(false);

    for (const double gamma : {0.5, 1.0, 2.0, 5.0}) {
        const DonorPotential p(gamma, 0);
        for (const auto& s : state_block(2, 2)) {
            const double exact = exact_landau(s, gamma);
            const SpectrumPoint pt = epsilon_pslet(p, s, opts);
            if (std::fabs(pt.epsilon - exact) > 1e-10)
                out.fail(s.name() + " at gamma " + fmt(gamma) + ": error " +
                         fmt(std::fabs(pt.epsilon - exact)));
        }
    }

    *seconds = now_seconds() - t0;
    if (*seconds >= 1.0) out.fail("runtime " + fmt(*seconds) + " s >= 1 s");
    if (out.pass) out.detail = "60 state/field points, pipeline error <= 1e-10";
    return out;
}

Outcome criterion_oracle_equivalence(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    const SpectrumOptions opts{[] {
        SpectrumOptions o;
        o.series.extended_precision = true;
        return o;
    }()};

    const std::vector<StateLabel> states = {StateLabel::parse("1s"), StateLabel::parse("2p+"),
                                            StateLabel::parse("2p-"), StateLabel::parse("2s")};
    int failures = 0;
    double worst = 0.0;
    std::string worst_tag;
    for (const double gamma : {0.2, 1.0, 5.0}) {
        const DonorPotential p(gamma, 1);
        for (const auto& s : states) {
            const double eps = epsilon_pslet(p, s, opts).epsilon;
            const double ref = shoot_epsilon(p, s);
            const double delta = std::fabs(eps - ref);
            const bool ok = delta <= 1e-4;
            if (!ok) ++failures;
            if (delta > worst) {
                worst = delta;
                worst_tag = s.name() + "@gamma=" + fmt(gamma);
            }
            out.lines.push_back("    " + std::string(ok ? "ok  " : "FAIL") + "  " + s.name() +
                                "  gamma=" + fmt(gamma) + "  pslet=" + fmt(eps) +
                                "  oracle=" + fmt(ref) + "  |delta|=" + fmt(delta));
        }
    }

    *seconds = now_seconds() - t0;
    if (*seconds >= 30.0) out.fail("runtime " + fmt(*seconds) + " s >= 30 s");
    if (failures > 0)
        out.fail(std::to_string(failures) + "/12 points exceed 1e-4 (worst " + worst_tag + ": " +
                 fmt(worst) + "); see ledger: the resummed series floor for 2s is ~3e-3");
    if (out.pass) out.detail = "12 points within 1e-4 of the shooting reference";
    return out;
}

Outcome criterion_monotonicity(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    const auto grid = uniform_grid(0.0, 1.0, 21);

    std::vector<std::vector<double>> eps(kFamilies.size());
    for (size_t i = 0; i < kFamilies.size(); ++i) {
        const SweepResult sr = sweep(1, StateLabel::parse(kFamilies[i]), grid, false);
        for (size_t k = 0; k < grid.size(); ++k) {
            if (!sr.ok(k)) out.fail(kFamilies[i] + ": point failed");
            eps[i].push_back(sr.points[k].epsilon);
        }
        for (size_t k = 1; k < grid.size(); ++k)
            if (eps[i][k] < eps[i][k - 1] - 1e-12)
                out.fail(kFamilies[i] + " decreases at gamma=" + fmt(grid[k]));
    }
    // excited-state gaps against 1s widen with the field
    for (size_t i = 1; i < kFamilies.size(); ++i)
        for (size_t k = 1; k < grid.size(); ++k)
            if (eps[i][k] - eps[0][k] < eps[i][k - 1] - eps[0][k - 1] - 1e-12)
                out.fail("gap " + kFamilies[i] + "-1s narrows at gamma=" + fmt(grid[k]));

    *seconds = now_seconds() - t0;
    if (out.pass) out.detail = "7 states nondecreasing on 21 points; gaps to 1s widen";
    return out;
}

Outcome criterion_zeeman_phenomenology(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    const auto grid = uniform_grid(0.005, 1.0, 200);
    const SpectrumOptions opts;

    const auto sweep_of = [&](const char* name) {
        return sweep(1, StateLabel::parse(name), grid, true, opts);
    };

    struct Pair {
        const char* a;
        const char* b;
    };
    const Pair pairs[] = {{"3d-", "2p+"}, {"3d+", "4d-"}};
    double crossing_gamma[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        const auto crossings = find_crossing(sweep_of(pairs[i].a), sweep_of(pairs[i].b), opts);
        if (crossings.size() != 1) {
            out.fail(std::string(pairs[i].a) + " x " + pairs[i].b + ": " +
                     std::to_string(crossings.size()) + " crossings, expected 1");
            continue;
        }
        crossing_gamma[i] = crossings[0].gamma;
        out.lines.push_back("    crossing " + std::string(pairs[i].a) + " x " + pairs[i].b +
                            " at gamma = " + fmt(crossings[0].gamma));
    }

    for (const char* name : {"2p-", "3d-"}) {
        const auto m = find_minimum(sweep_of(name), opts);
        if (!m.has_value())
            out.fail(std::string(name) + ": no interior minimum");
        else
            out.lines.push_back("    minimum of " + std::string(name) + " at gamma = " +
                                fmt(m->gamma) + ", E = " + fmt(m->energy));
    }

    // crossings re-derived from the shooting reference, 5% agreement
    ShootingConfig coarse;
    coarse.step_count = 50000;
    for (int i = 0; i < 2; ++i) {
        if (crossing_gamma[i] == 0.0) continue;
        const StateLabel sa = StateLabel::parse(pairs[i].a);
        const StateLabel sb = StateLabel::parse(pairs[i].b);
        const auto oracle_diff = [&](double gamma) {
            const DonorPotential p(gamma, 1);
            return (shoot_epsilon(p, sa, coarse) + sa.m * gamma) -
                   (shoot_epsilon(p, sb, coarse) + sb.m * gamma);
        };
        double lo = std::max(0.004, crossing_gamma[i] * 0.5);
        double hi = std::min(1.0, crossing_gamma[i] * 1.8);
        double dlo = oracle_diff(lo);
        if (dlo * oracle_diff(hi) > 0.0) {
            out.fail(std::string(pairs[i].a) + " x " + pairs[i].b +
                     ": reference crossing not bracketed");
            continue;
        }
        while (hi - lo > 1e-3 * crossing_gamma[i]) {
            const double mid = 0.5 * (lo + hi);
            const double dm = oracle_diff(mid);
            if ((dm < 0.0) == (dlo < 0.0)) {
                lo = mid;
                dlo = dm;
            } else {
                hi = mid;
            }
        }
        const double ref = 0.5 * (lo + hi);
        const double rel = std::fabs(crossing_gamma[i] - ref) / ref;
        out.lines.push_back("    reference crossing " + std::string(pairs[i].a) + " x " +
                            pairs[i].b + " at gamma = " + fmt(ref) + " (rel. diff " + fmt(rel) +
                            ")");
        if (rel > 0.05)
            out.fail(std::string(pairs[i].a) + " x " + pairs[i].b + ": crossing differs by " +
                     fmt(100.0 * rel) + "%");
    }

    *seconds = now_seconds() - t0;
    if (out.pass) out.detail = "crossings unique and within 5% of reference; minima present";
    return out;
}

Outcome criterion_landau_ordering(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();

    const auto first = landau_ordering(1, 10.0,
                                       {StateLabel::parse("3d-"), StateLabel::parse("2p-"),
                                        StateLabel::parse("1s")});
    const std::vector<std::string> want_first = {"1s", "2p-", "3d-"};
    for (size_t i = 0; i < first.size(); ++i)
        if (first[i].name() != want_first[i]) out.fail("first-group order wrong");

    const auto second = landau_ordering(1, 10.0,
                                        {StateLabel::parse("4d-"), StateLabel::parse("3p-"),
                                         StateLabel::parse("2p+"), StateLabel::parse("2s")});
    const std::vector<std::string> want_second = {"2s", "2p+", "3p-", "4d-"};
    for (size_t i = 0; i < second.size(); ++i)
        if (second[i].name() != want_second[i]) out.fail("second-group order wrong");

    const DonorPotential p(10.0, 1);
    const double top_first = epsilon_pslet(p, StateLabel::parse("3d-")).energy();
    const double bottom_second = epsilon_pslet(p, StateLabel::parse("2s")).energy();
    if (!(top_first < bottom_second)) out.fail("groups overlap at gamma = 10");

    *seconds = now_seconds() - t0;
    if (out.pass)
        out.detail = "1s < 2p- < 3d- < 2s < 2p+ < 3p- < 4d- at gamma = 10";
    return out;
}

Outcome criterion_degeneracy(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();

    const std::vector<std::vector<std::string>> groups = {{"2s", "2p+", "2p-"},
                                                          {"3s", "3p+", "3p-", "3d+", "3d-"}};

    // degenerate at zero field (full pipeline, extended precision)
    const SpectrumOptions forced = full_pipeline(true);
    const DonorPotential p0(0.0, 1);
    for (const auto& group : groups) {
        const double base = epsilon_pslet(p0, StateLabel::parse(group[0]), forced).epsilon;
        for (const auto& name : group) {
            const double eps = epsilon_pslet(p0, StateLabel::parse(name), forced).epsilon;
            if (std::fabs(eps - base) > 1e-10)
                out.fail("zero-field split " + name + ": " + fmt(std::fabs(eps - base)));
        }
    }

    // all pairs split by more than 1e-3 at gamma = 0.1 with the Zeeman term
    const DonorPotential p1(0.1, 1);
    for (const auto& group : groups) {
        std::vector<double> energies;
        for (const auto& name : group)
            energies.push_back(epsilon_pslet(p1, StateLabel::parse(name)).energy());
        for (size_t i = 0; i < energies.size(); ++i)
            for (size_t j = i + 1; j < energies.size(); ++j)
                if (std::fabs(energies[i] - energies[j]) < 1e-3)
                    out.fail("split " + group[i] + "/" + group[j] + " below 1e-3");
    }

    *seconds = now_seconds() - t0;
    if (out.pass) out.detail = "degenerate to 1e-10 at gamma=0; all pairs split > 1e-3 at 0.1";
    return out;
}

Outcome criterion_residual_closure(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();
    double worst = 0.0;

    const auto probe = [&](const DonorPotential& p, const StateLabel& s, bool extended) {
        SeriesOptions so;
        so.extended_precision = extended;
        const PlateauGeometry g = solve_plateau(p, s.n_rho, s.l());
        const HierarchyResult hr = solve_hierarchy(p, g, s.n_rho, so);
        for (const double r : hr.energies.residual_per_order) worst = std::max(worst, r);
    };

    for (const auto& name : kFamilies) {
        const StateLabel s = StateLabel::parse(name);
        probe(DonorPotential(0.0, 1), s, true);
        probe(DonorPotential(1.0, 0), s, false);
        for (const double gamma : uniform_grid(0.05, 1.0, 20)) probe(DonorPotential(gamma, 1), s, false);
        probe(DonorPotential(5.0, 1), s, false);
        probe(DonorPotential(10.0, 1), s, false);
    }

    *seconds = now_seconds() - t0;
    if (worst > 1e-9) out.fail("worst relative residual " + fmt(worst));
    if (out.pass) out.detail = "worst relative residual " + fmt(worst) + " over 168 solves";
    return out;
}

Outcome criterion_pade_reconstruction(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();

    unsigned long long state = 0x853c49e6748fea9bull;
    const auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state >> 11) / 9007199254740992.0 * 2.0 - 1.0;
    };

    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> p(5);
        std::vector<double> q(5);
        q[0] = 1.0;
        for (auto& v : p) v = next();
        for (size_t j = 1; j < q.size(); ++j) q[j] = 0.2 * next();

        std::vector<double> series(9, 0.0);
        for (int i = 0; i < 9; ++i) {
            double sum = i < 5 ? p[static_cast<size_t>(i)] : 0.0;
            for (int j = 1; j <= std::min(i, 4); ++j)
                sum -= q[static_cast<size_t>(j)] * series[static_cast<size_t>(i - j)];
            series[static_cast<size_t>(i)] = sum;
        }

        const RationalApproximant r = pade_from_series(series, 4, 4);
        if (r.condition_flag || r.numerator.size() != 5 || r.denominator.size() != 5) {
            out.fail("trial " + std::to_string(trial) + ": construction degraded");
            continue;
        }
        for (size_t i = 0; i < 5; ++i) {
            if (std::fabs(r.numerator[i] - p[i]) > 1e-10)
                out.fail("numerator coefficient off by " + fmt(std::fabs(r.numerator[i] - p[i])));
            if (std::fabs(r.denominator[i] - q[i]) > 1e-10)
                out.fail("denominator coefficient off by " +
                         fmt(std::fabs(r.denominator[i] - q[i])));
        }
    }

    *seconds = now_seconds() - t0;
    if (out.pass) out.detail = "25 random degree-(4,4) rationals recovered to 1e-10";
    return out;
}

Outcome criterion_performance(double* seconds)
{
    Outcome out;
    const double t0 = now_seconds();

    // Full table-style run: 7 states x 21 fields, order 8, [4,4].
    {
        const double tt0 = now_seconds();
        const auto grid = uniform_grid(0.0, 1.0, 21);
        for (const auto& name : kFamilies) {
            const SweepResult sr = sweep(1, StateLabel::parse(name), grid, false);
            for (size_t i = 0; i < sr.grid.size(); ++i)
                if (!sr.ok(i)) out.fail("table point failed");
        }
        const double dt = now_seconds() - tt0;
        out.lines.push_back("    table run (7 x 21): " + fmt(dt) + " s");
        if (dt >= 5.0) out.fail("table run took " + fmt(dt) + " s >= 5 s");
    }

    // Regenerate the committed reference table and compare.
    {
        const double tt0 = now_seconds();
        const auto fixture = read_oracle_fixture_file(PSLET_FIXTURE_PATH);
        if (fixture.size() != 42) out.fail("fixture has unexpected size");
        for (const auto& rec : fixture) {
            const DonorPotential p(rec.gamma, rec.w);
            const double eps = shoot_epsilon(p, rec.state);
            if (std::fabs(eps - rec.epsilon) > 1e-6)
                out.fail("fixture drift for " + rec.state.name() + " at gamma " +
                         fmt(rec.gamma) + ": " + fmt(std::fabs(eps - rec.epsilon)));
        }
        const double dt = now_seconds() - tt0;
        out.lines.push_back("    reference generation (42 eigenvalues): " + fmt(dt) + " s");
        if (dt >= 120.0) out.fail("reference generation took " + fmt(dt) + " s >= 120 s");
    }

    *seconds = now_seconds() - t0;
    if (out.pass) out.detail = "table < 5 s; reference regeneration < 120 s and matches";
    return out;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome(double*)> fn;
    };

    const std::vector<Criterion> criteria = {
        {1, "Coulomb limit: exact eigenvalues and vanishing corrections", criterion_coulomb_limit},
        {2, "pure-field limit: exact ladder eigenvalues", criterion_landau_limit},
        {3, "oracle equivalence at intermediate field (1e-4)", criterion_oracle_equivalence},
        {4, "monotone field dependence and widening gaps", criterion_monotonicity},
        {5, "Zeeman crossings and interior minima", criterion_zeeman_phenomenology},
        {6, "level ordering at high field", criterion_landau_ordering},
        {7, "degeneracy at zero field, lifting at 0.1", criterion_degeneracy},
        {8, "residual closure over the full grid", criterion_residual_closure},
        {9, "rational reconstruction of degree-(4,4) functions", criterion_pade_reconstruction},
        {10, "runtime budgets", criterion_performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        double seconds = 0.0;
        Outcome out;
        try {
            out = c.fn(&seconds);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("[%s] criterion %2d: %s (%s) [%.2f s]\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.title, out.detail.c_str(), seconds);
        for (const auto& line : out.lines) std::printf("%s\n", line.c_str());
        std::fflush(stdout);
    }

    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
