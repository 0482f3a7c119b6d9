#include "pslet/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pslet {

namespace {

double residual_at(const DonorPotential& p, int n_rho, int l, double rho)
{
    return detail::plateau_residual(p.gamma, p.w, n_rho, l, rho);
}

double refine_root(const DonorPotential& p, int n_rho, int l, double lo, double hi,
                   const PlateauOptions& opts)
{
    double flo = residual_at(p, n_rho, l, lo);
    while (hi - lo > opts.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fmid = residual_at(p, n_rho, l, mid);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    double root = 0.5 * (lo + hi);
    for (int i = 0; i < opts.newton_steps; ++i) {
        const double f = residual_at(p, n_rho, l, root);
        const double df = detail::plateau_residual_derivative(p.gamma, p.w, n_rho, l, root);
        if (df == 0.0) break;
        const double next = root - f / df;
        if (!std::isfinite(next) || next <= 0.0) break;
        root = next;
    }
    return root;
}

} // namespace

double omega_generic(const DonorPotential& p, double rho0)
{
    const double v1 = derivative(p, rho0, 1);
    const double v2 = derivative(p, rho0, 2);
    return 2.0 * std::sqrt(3.0 + rho0 * v2 / v1);
}

double omega_closed_form(double gamma, int w, double rho0)
{
    const double g2r3 = gamma * gamma * rho0 * rho0 * rho0;
    return 2.0 * std::sqrt(2.0) * std::sqrt((2.0 * g2r3 + 2.0 * w) / (g2r3 + 4.0 * w));
}

double leading_energy(const PlateauGeometry& g, const DonorPotential& p)
{
    return g.l_tilde * g.l_tilde * (1.0 / (g.rho0 * g.rho0) + value(p, g.rho0) / g.q_factor);
}

PlateauGeometry solve_plateau(const DonorPotential& p, int n_rho, int l,
                              const PlateauOptions& opts)
{
    if (n_rho < 0 || l < 0)
        throw DomainError("solve_plateau: n_rho and l must be non-negative");

    // The two exact limits bound the scale of the intermediate root.
    const double rho_coul = (n_rho + l + 0.5) * (n_rho + l + 0.5);
    const double rho_osc = std::sqrt(2.0 * (l + 2 * n_rho + 1) / std::max(p.gamma, 1e-6));
    double lo = rho_coul / 64.0;
    double hi = 8.0 * std::max(rho_coul, rho_osc);

    std::vector<std::pair<double, double>> brackets;
    for (int expansion = 0; expansion <= opts.bracket_expansions; ++expansion) {
        brackets.clear();
        double x_prev = lo;
        double f_prev = residual_at(p, n_rho, l, x_prev);
        for (int i = 1; i <= opts.scan_points; ++i) {
            const double x = lo + (hi - lo) * i / opts.scan_points;
            const double f = residual_at(p, n_rho, l, x);
            if ((f < 0.0) != (f_prev < 0.0)) brackets.emplace_back(x_prev, x);
            x_prev = x;
            f_prev = f;
        }
        if (!brackets.empty()) break;
        lo *= 0.5;
        hi *= 2.0;
    }
    if (brackets.empty())
        throw BracketingError("solve_plateau: no sign change of the plateau equation in "
                              "the expanded bracket");

    // Several roots would mean several stationary points; keep the one that
    // minimizes the leading energy term.
    double best_rho = 0.0;
    double best_leading = 0.0;
    for (const auto& [blo, bhi] : brackets) {
        const double rho = refine_root(p, n_rho, l, blo, bhi, opts);
        const double q = rho * rho * rho * derivative(p, rho, 1) / 2.0;
        const double lead = q / (rho * rho) + value(p, rho);
        if (best_rho == 0.0 || lead < best_leading) {
            best_rho = rho;
            best_leading = lead;
        }
    }

    PlateauGeometry g;
    g.rho0 = best_rho;
    g.n_rho = n_rho;
    g.l = l;
    g.gamma = p.gamma;
    g.w = p.w;
    g.candidate_roots = static_cast<int>(brackets.size());

    g.omega = omega_generic(p, best_rho);
    const double omega_check = omega_closed_form(p.gamma, p.w, best_rho);
    if (std::fabs(g.omega - omega_check) > 1e-12 * std::max(1.0, std::fabs(g.omega)))
        throw DomainError("solve_plateau: frequency closed form disagrees with the "
                          "curvature form");

    g.beta = -0.5 * (n_rho + 0.5) * g.omega;
    g.l_tilde = l - g.beta;
    g.q_factor = g.l_tilde * g.l_tilde;
    g.residual = residual_at(p, n_rho, l, best_rho);
    g.leading_energy = leading_energy(g, p);

    // Minimum (not maximum) of the leading term.
    g.second_derivative = 6.0 / std::pow(best_rho, 4) + derivative(p, best_rho, 2) / g.q_factor;
    if (!(g.second_derivative > 0.0))
        throw DomainError("solve_plateau: plateau point is not a minimum of the leading "
                          "energy term");
    return g;
}

} // namespace pslet
