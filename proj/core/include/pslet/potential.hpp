#pragma once

#include <cmath>

#include "pslet/errors.hpp"

namespace pslet {

/// Highest closed-form derivative order handed out by default. The order-8
/// energy series consumes d^20 V; the rest is headroom for diagnostics.
inline constexpr int kDefaultMaxDerivativeOrder = 24;

/// Dimensionless donor potential V(rho) = gamma^2 rho^2 / 4 - 2 w / rho,
/// with rho in effective Bohr radii and energies in effective Rydberg.
struct DonorPotential {
    double gamma; ///< dimensionless magnetic field, >= 0
    int w;        ///< Coulomb switch, 0 or 1

    DonorPotential(double gamma_, int w_) : gamma(gamma_), w(w_)
    {
        if (!std::isfinite(gamma) || gamma < 0.0)
            throw DomainError("DonorPotential: gamma must be finite and >= 0");
        if (w != 0 && w != 1)
            throw DomainError("DonorPotential: w must be 0 or 1");
        if (gamma == 0.0 && w == 0)
            throw DomainError("DonorPotential: gamma = 0 and w = 0 leaves no potential");
    }
};

/// Host material description, used only for unit conversions.
struct MaterialParams {
    double effective_mass_ratio; ///< m*/m, > 0
    double dielectric_constant;  ///< epsilon, >= 1
    double magnetic_field;       ///< B in tesla, >= 0

    MaterialParams(double mass_ratio, double eps, double b_tesla)
        : effective_mass_ratio(mass_ratio), dielectric_constant(eps), magnetic_field(b_tesla)
    {
        if (!std::isfinite(mass_ratio) || mass_ratio <= 0.0)
            throw DomainError("MaterialParams: effective mass ratio must be > 0");
        if (!std::isfinite(eps) || eps < 1.0)
            throw DomainError("MaterialParams: dielectric constant must be >= 1");
        if (!std::isfinite(b_tesla) || b_tesla < 0.0)
            throw DomainError("MaterialParams: magnetic field must be >= 0");
    }
};

/// Result of converting material parameters to solver units.
struct DimensionlessParams {
    double gamma;                ///< hbar omega_c / (2 R*)
    double effective_rydberg_ev; ///< R* in eV
    double effective_bohr_nm;    ///< a* in nm
};

/// V(rho) at rho > 0.
double value(const DonorPotential& p, double rho);

/// d^order V / d rho^order in closed form, order >= 1.
double derivative(const DonorPotential& p, double rho, int order,
                  int max_order = kDefaultMaxDerivativeOrder);

/// Informational conversion; output never feeds the dimensionless solver.
DimensionlessParams material_to_dimensionless(const MaterialParams& mp);

namespace detail {

// Scalar-generic versions used by the extended-precision series path.
template <class T>
T potential_value(double gamma, int w, const T& rho)
{
    const T g2 = T(gamma) * T(gamma);
    return g2 * rho * rho / T(4) - T(2 * w) / rho;
}

template <class T>
T potential_derivative(double gamma, int w, const T& rho, int order)
{
    T result(0);
    if (order == 1)
        result = T(gamma) * T(gamma) * rho / T(2);
    else if (order == 2)
        result = T(gamma) * T(gamma) / T(2);
    if (w != 0) {
        // -2 (-1)^k k! / rho^(k+1)
        T term = T(order % 2 == 0 ? -2 : 2);
        for (int i = 2; i <= order; ++i) term = term * T(i);
        T rpow = rho;
        for (int i = 1; i <= order; ++i) rpow = rpow * rho;
        result = result + term / rpow;
    }
    return result;
}

} // namespace detail

} // namespace pslet
