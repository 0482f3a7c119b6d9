#pragma once

#include <vector>

#include "pslet/plateau.hpp"
#include "pslet/polynomial.hpp"
#include "pslet/potential.hpp"

namespace pslet {

/// Truncation and precision controls for the coefficient hierarchy.
///
/// extended_precision runs the coefficient solve in double-double. It is
/// on by default: for the smallest shifted quantum numbers (l_tilde near
/// 1/2) plain binary64 leaves ~1e-7 cancellation noise in the high-order
/// energy coefficients, visible after resummation. The double path costs
/// about a third of the time and is fine for l_tilde above ~2.
struct SeriesOptions {
    int target_order = 8;      ///< highest kept power of 1/l_tilde, even
    double trust_region = 3.0; ///< |x| bound accepted by eval_wavefunction
    bool extended_precision = true; ///< run the hierarchy in double-double
    int max_derivative_order = kDefaultMaxDerivativeOrder;
};

/// Expansion of the scaled potential about the plateau point: terms[n] is
/// the polynomial in x multiplying l_tilde^(-n/2).
struct HalfPowerSeries {
    std::vector<Poly> terms;
};

/// Energy coefficients of the 1/l_tilde expansion plus per-order residual
/// diagnostics of the coefficient matching.
struct EnergySeries {
    double e_minus2 = 0.0; ///< leading coefficient, 1/rho0^2 + V(rho0)/Q
    double e_minus1 = 0.0; ///< closure residual of the shift choice, ~0
    std::vector<double> e_n; ///< E^(0) .. E^(K)
    std::vector<double> residual_per_order; ///< relative, index = half-order
    bool residual_ok = true; ///< all residuals within tolerance

    /// l_tilde^2 E^(-2) + sum_k E^(k) / l_tilde^k.
    double truncated_sum(double l_tilde) const;
};

/// Tables defining the wavefunction ansatz u(x) = F(x) exp(U(x)):
/// odd-power coefficients D of the U' pieces, even-power coefficients C of
/// the G pieces entering at half-integer offsets, and the node-polynomial
/// corrections a of F.
struct WavefunctionCoefficients {
    int n_rho = 0;
    int l = 0;
    double l_tilde = 0.0;
    double trust_region = 3.0;

    std::vector<std::vector<double>> d_coeffs; ///< [n][m], coefficient of x^(2m-1); m=0 entry is 0
    std::vector<std::vector<double>> c_coeffs; ///< [n][m], coefficient of x^(2m)
    std::vector<std::vector<double>> a_coeffs; ///< [n][p], F correction of degree p < n_rho
};

/// Result bundle of one hierarchy solve.
struct HierarchyResult {
    EnergySeries energies;
    WavefunctionCoefficients wavefunction;
};

/// Builds the half-power expansion terms of the scaled potential up to
/// max_half_order. Term 0 is Omega^2 x^2 / 4 + 2 beta; term n >= 2 needs
/// the (n+2)-th potential derivative.
HalfPowerSeries build_v(const DonorPotential& p, const PlateauGeometry& g, int max_half_order,
                        int max_derivative_order = kDefaultMaxDerivativeOrder);

/// Solves the coefficient hierarchy order by order and returns the energy
/// series through E^(target_order) together with the wavefunction tables.
HierarchyResult solve_hierarchy(const DonorPotential& p, const PlateauGeometry& g, int n_rho,
                                const SeriesOptions& opts = {});

/// Unnormalized u(x) = F(x) exp(U(x)) with U(0) = 0, assembled from the
/// solved tables. |x| must lie within the configured trust region.
double eval_wavefunction(const WavefunctionCoefficients& wc, const PlateauGeometry& g, double x);

} // namespace pslet
