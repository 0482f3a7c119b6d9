#include "pslet/potential.hpp"

namespace pslet {

namespace {

// CODATA 2018 values.
constexpr double kHbar = 1.054571817e-34;        // J s
constexpr double kElectronCharge = 1.602176634e-19; // C
constexpr double kElectronMass = 9.1093837015e-31;  // kg

void check_rho(double rho)
{
    if (!std::isfinite(rho) || rho <= 0.0)
        throw DomainError("potential: rho must be finite and > 0");
}

} // namespace

double value(const DonorPotential& p, double rho)
{
    check_rho(rho);
    return detail::potential_value(p.gamma, p.w, rho);
}

double derivative(const DonorPotential& p, double rho, int order, int max_order)
{
    check_rho(rho);
    if (order < 1)
        throw DomainError("potential: derivative order must be >= 1");
    if (order > max_order)
        throw ConfigError("potential: derivative order " + std::to_string(order) +
                          " exceeds configured maximum " + std::to_string(max_order));
    return detail::potential_derivative(p.gamma, p.w, rho, order);
}

DimensionlessParams material_to_dimensionless(const MaterialParams& mp)
{
    DimensionlessParams out{};
    out.effective_rydberg_ev = 13.6 * mp.effective_mass_ratio /
                               (mp.dielectric_constant * mp.dielectric_constant);
    out.effective_bohr_nm = 0.0529 * mp.dielectric_constant / mp.effective_mass_ratio;

    const double mu = mp.effective_mass_ratio * kElectronMass;
    const double omega_c = kElectronCharge * mp.magnetic_field / mu; // rad/s
    const double hbar_omega_c_ev = kHbar * omega_c / kElectronCharge;
    out.gamma = hbar_omega_c_ev / (2.0 * out.effective_rydberg_ev);
    return out;
}

} // namespace pslet
