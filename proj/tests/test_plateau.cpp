#include <doctest.h>

#include <cmath>

#include "pslet/plateau.hpp"

using namespace pslet;

namespace {

// Independent transcription of the plateau condition, used as a root oracle.
double plateau_lhs_minus_rhs(double gamma, int w, int n_rho, int l, double rho)
{
    const double g2r3 = gamma * gamma * rho * rho * rho;
    const double lhs = l + std::sqrt(2.0) * (n_rho + 0.5) *
                               std::sqrt((2.0 * g2r3 + 2.0 * w) / (g2r3 + 4.0 * w));
    const double rhs = std::sqrt(0.25 * gamma * gamma * rho * rho * rho * rho + w * rho);
    return lhs - rhs;
}

double bisect_oracle(double gamma, int w, int n_rho, int l, double lo, double hi)
{
    double flo = plateau_lhs_minus_rhs(gamma, w, n_rho, l, lo);
    REQUIRE(flo * plateau_lhs_minus_rhs(gamma, w, n_rho, l, hi) < 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = plateau_lhs_minus_rhs(gamma, w, n_rho, l, mid);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("zero-field closed form")
{
    const DonorPotential p(0.0, 1);
    for (int n_rho = 0; n_rho <= 3; ++n_rho) {
        for (int l = 0; l <= 3; ++l) {
            const auto g = solve_plateau(p, n_rho, l);
            const double lt = n_rho + l + 0.5;
            CHECK(g.rho0 == doctest::Approx(lt * lt).epsilon(1e-12));
            CHECK(g.omega == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(g.beta == doctest::Approx(-(n_rho + 0.5)).epsilon(1e-12));
            CHECK(g.l_tilde == doctest::Approx(lt).epsilon(1e-12));
            CHECK(g.leading_energy == doctest::Approx(-1.0 / (lt * lt)).epsilon(1e-12));
            CHECK(g.second_derivative > 0.0);
        }
    }
}

TEST_CASE("pure-field closed form")
{
    for (const double gamma : {1.0, 2.0}) {
        const DonorPotential p(gamma, 0);
        for (int n_rho = 0; n_rho <= 3; ++n_rho) {
            for (int l = 0; l <= 3; ++l) {
                const auto g = solve_plateau(p, n_rho, l);
                CHECK(g.rho0 ==
                      doctest::Approx(std::sqrt(2.0 * (l + 2 * n_rho + 1) / gamma)).epsilon(1e-12));
                CHECK(g.omega == doctest::Approx(4.0).epsilon(1e-12));
                CHECK(g.l_tilde == doctest::Approx(2 * n_rho + l + 1).epsilon(1e-12));
                CHECK(g.leading_energy ==
                      doctest::Approx((2 * n_rho + l + 1) * gamma).epsilon(1e-12));
            }
        }
    }
    const auto g = solve_plateau(DonorPotential(1.0, 0), 0, 0);
    CHECK(g.rho0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(g.beta == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("mixed case against bisection oracle")
{
    const DonorPotential p(1.0, 1);
    const auto g = solve_plateau(p, 0, 0);
    CHECK(g.rho0 > 0.2);
    CHECK(g.rho0 < 2.0);
    CHECK(std::fabs(g.residual) < 1e-12);

    const double oracle = bisect_oracle(1.0, 1, 0, 0, 0.2, 2.0);
    CHECK(g.rho0 == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(g.candidate_roots == 1);
}

TEST_CASE("leading energies")
{
    CHECK(solve_plateau(DonorPotential(0.0, 1), 0, 0).leading_energy ==
          doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(solve_plateau(DonorPotential(1.0, 0), 0, 0).leading_energy ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solve_plateau(DonorPotential(0.0, 1), 0, 2).leading_energy ==
          doctest::Approx(-0.16).epsilon(1e-12));

    const DonorPotential p(0.7, 1);
    const auto g = solve_plateau(p, 1, 2);
    CHECK(leading_energy(g, p) == doctest::Approx(g.leading_energy).epsilon(1e-14));
}

TEST_CASE("frequency forms agree")
{
    // generic curvature form vs the donor-specific closed form
    const double gammas[] = {0.0, 0.3, 1.0, 4.2, 9.7};
    const double rhos[] = {0.21, 0.8, 1.7, 5.5};
    for (const double gamma : gammas) {
        for (const double rho : rhos) {
            const DonorPotential p(gamma, 1);
            CHECK(omega_generic(p, rho) ==
                  doctest::Approx(omega_closed_form(gamma, 1, rho)).epsilon(1e-12));
        }
    }
    const DonorPotential osc(2.0, 0);
    CHECK(omega_generic(osc, 1.3) == doctest::Approx(omega_closed_form(2.0, 0, 1.3)).epsilon(1e-12));
}

TEST_CASE("leading term is a minimum")
{
    // curvature of E^(-2)(rho) at rho0 by central differences, Q held fixed
    for (const double gamma : {0.0, 0.5, 3.0}) {
        const DonorPotential p(gamma, 1);
        const auto g = solve_plateau(p, 1, 1);
        const auto e_lead = [&](double rho) {
            return 1.0 / (rho * rho) + value(p, rho) / g.q_factor;
        };
        const double h = 1e-5 * g.rho0;
        const double d1 = (e_lead(g.rho0 + h) - e_lead(g.rho0 - h)) / (2.0 * h);
        const double d2 =
            (e_lead(g.rho0 + h) - 2.0 * e_lead(g.rho0) + e_lead(g.rho0 - h)) / (h * h);
        CHECK(std::fabs(d1) < 1e-6 * std::max(1.0, std::fabs(d2) * g.rho0));
        CHECK(d2 > 0.0);
        CHECK(g.second_derivative == doctest::Approx(d2).epsilon(1e-4));
    }
}

TEST_CASE("plateau radius vs field strength")
{
    // The plateau point moves inward monotonically over gamma in [0, 10]
    // for states whose zero-field radius dominates the shift growth; the
    // node-heavy and l = 0 states (1s, 2s, 3s, 3p) first drift outward
    // because the shift inflates l_tilde faster than the field compresses
    // the well, and only then shrink.
    for (const auto& [n_rho, l] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}, {2, 2}}) {
        double prev = solve_plateau(DonorPotential(0.0, 1), n_rho, l).rho0;
        for (int i = 1; i <= 40; ++i) {
            const double gamma = 10.0 * i / 40.0;
            const double rho0 = solve_plateau(DonorPotential(gamma, 1), n_rho, l).rho0;
            CHECK(rho0 < prev);
            prev = rho0;
        }
    }
    // every state shrinks once the field dominates
    for (const auto& [n_rho, l] : {std::pair{0, 0}, {1, 0}, {2, 0}, {1, 1}}) {
        double prev = solve_plateau(DonorPotential(40.0, 1), n_rho, l).rho0;
        for (const double gamma : {60.0, 90.0, 140.0, 200.0}) {
            const double rho0 = solve_plateau(DonorPotential(gamma, 1), n_rho, l).rho0;
            CHECK(rho0 < prev);
            prev = rho0;
        }
    }
    // continuity: small field steps move the root by small amounts (the
    // steepest stretch, 2s below gamma ~ 0.3, has slope ~5)
    for (const auto& [n_rho, l] : {std::pair{0, 0}, {1, 0}}) {
        double r = solve_plateau(DonorPotential(0.0, 1), n_rho, l).rho0;
        for (int i = 1; i <= 100; ++i) {
            const double rho0 = solve_plateau(DonorPotential(i / 100.0, 1), n_rho, l).rho0;
            CHECK(std::fabs(rho0 - r) < 0.08);
            r = rho0;
        }
        for (int i = 1; i <= 90; ++i) {
            const double rho0 = solve_plateau(DonorPotential(1.0 + 9.0 * i / 90.0, 1), n_rho, l).rho0;
            CHECK(std::fabs(rho0 - r) < 0.15);
            r = rho0;
        }
    }
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(solve_plateau(DonorPotential(1.0, 1), -1, 0), DomainError);
    CHECK_THROWS_AS(solve_plateau(DonorPotential(1.0, 1), 0, -2), DomainError);
}
