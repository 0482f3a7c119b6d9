#pragma once

#include <vector>

#include "pslet/plateau.hpp"
#include "pslet/series.hpp"

namespace pslet {

struct PadeOptions {
    double pivot_tolerance = 1e-12;    ///< pivot / max-element ratio treated as singular
    double reexpand_tolerance = 1e-9;  ///< relative match required of a reduced table
    double pole_search_factor = 1.5;   ///< poles rejected within (0, factor * z]
};

/// [N,M] rational approximant P(z)/Q(z) with Q(0) = 1.
struct RationalApproximant {
    std::vector<double> numerator;   ///< P_0 .. P_M
    std::vector<double> denominator; ///< 1, q_1 .. q_N
    bool condition_flag = false;     ///< set when no usable table entry exists

    double evaluate(double z) const;
};

/// Builds the [denom_degree, numer_degree] approximant of a Maclaurin
/// series. A singular coefficient system triggers a staircase retreat to
/// lower orders; if no reduced entry reproduces the series either, the
/// approximant comes back with condition_flag set (callers then use the
/// truncated sum).
RationalApproximant pade_from_series(const std::vector<double>& series, int numer_degree,
                                     int denom_degree, const PadeOptions& opts = {});

/// Maclaurin coefficients of the approximant through order count-1.
std::vector<double> reexpand(const RationalApproximant& r, int count);

/// l_tilde^2 E^(-2) + P(1/l_tilde)/Q(1/l_tilde) for an approximant built
/// from E^(0)..E^(K). Falls back to the plain truncated sum when the
/// approximant is flagged; throws PadePoleError when the denominator has a
/// real zero at or near the evaluation point.
double assemble_epsilon(const PlateauGeometry& g, const EnergySeries& es,
                        const RationalApproximant& r, const PadeOptions& opts = {});

} // namespace pslet
