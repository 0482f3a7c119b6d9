#pragma once

#include "pslet/potential.hpp"

namespace pslet {

/// Root-finder controls for the plateau radius.
struct PlateauOptions {
    double bisect_tol = 1e-13; ///< absolute tolerance on rho
    int newton_steps = 3;      ///< polish iterations after bisection
    int bracket_expansions = 10;
    int scan_points = 64; ///< subdivisions used to detect multiple roots
};

/// Geometry of the shifted expansion about the plateau radius rho0: the
/// effective oscillator frequency Omega, the shift beta, the shifted
/// quantum number l_tilde = l - beta and its square Q.
struct PlateauGeometry {
    double rho0 = 0.0;
    double omega = 0.0;
    double beta = 0.0;
    double l_tilde = 0.0;
    double q_factor = 0.0;       ///< Q = l_tilde^2
    double leading_energy = 0.0; ///< l_tilde^2 * (1/rho0^2 + V(rho0)/Q)

    int n_rho = 0;
    int l = 0;
    double gamma = 0.0;
    int w = 1;

    double residual = 0.0;          ///< plateau equation residual at rho0
    double second_derivative = 0.0; ///< curvature of the leading term, > 0
    int candidate_roots = 1;        ///< sign changes seen while bracketing
};

/// Solves the implicit plateau condition
///   l + sqrt(2) (n_rho + 1/2) sqrt((2 g^2 r^3 + 2w)/(g^2 r^3 + 4w))
///     = sqrt(g^2 r^4 / 4 + w r)
/// for rho0 and fills in the derived quantities.
PlateauGeometry solve_plateau(const DonorPotential& p, int n_rho, int l,
                              const PlateauOptions& opts = {});

/// l_tilde^2 * (1/rho0^2 + V(rho0)/Q) for a solved geometry.
double leading_energy(const PlateauGeometry& g, const DonorPotential& p);

/// 2 sqrt(3 + rho V''(rho)/V'(rho)), valid for any potential.
double omega_generic(const DonorPotential& p, double rho0);

/// Donor-specific closed form of the same frequency.
double omega_closed_form(double gamma, int w, double rho0);

namespace detail {

// Scalar-generic residual of the plateau condition and its rho-derivative;
// shared by the double solver, its Newton polish and the extended-precision
// refinement.
template <class T>
T plateau_residual(double gamma, int w, int n_rho, int l, const T& rho)
{
    using std::sqrt; // enable ADL for user scalar types
    const T g2 = T(gamma) * T(gamma);
    const T r3 = rho * rho * rho;
    const T ratio = (T(2) * g2 * r3 + T(2 * w)) / (g2 * r3 + T(4 * w));
    const T lhs = T(l) + sqrt(T(2)) * (T(n_rho) + T(0.5)) * sqrt(ratio);
    const T rhs = sqrt(g2 * r3 * rho / T(4) + T(w) * rho);
    return lhs - rhs;
}

template <class T>
T plateau_residual_derivative(double gamma, int w, int n_rho, int l, const T& rho)
{
    using std::sqrt;
    (void)l;
    const T g2 = T(gamma) * T(gamma);
    const T r2 = rho * rho;
    const T r3 = r2 * rho;
    const T den = g2 * r3 + T(4 * w);
    const T ratio = (T(2) * g2 * r3 + T(2 * w)) / den;
    const T dratio = T(18 * w) * g2 * r2 / (den * den);
    const T dlhs = sqrt(T(2)) * (T(n_rho) + T(0.5)) * dratio / (T(2) * sqrt(ratio));
    const T s = sqrt(g2 * r3 * rho / T(4) + T(w) * rho);
    const T drhs = (g2 * r3 + T(w)) / (T(2) * s);
    return dlhs - drhs;
}

} // namespace detail

} // namespace pslet
