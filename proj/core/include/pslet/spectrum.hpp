#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pslet/pade.hpp"
#include "pslet/plateau.hpp"
#include "pslet/potential.hpp"
#include "pslet/series.hpp"
#include "pslet/state.hpp"

namespace pslet {

/// How a spectrum value was produced.
enum class Method { pade, truncated_sum, exact_limit };

std::string method_name(Method m, int numer_degree = 4, int denom_degree = 4);

/// Per-point solver diagnostics carried alongside each eigenvalue.
struct Diagnostics {
    double max_residual = 0.0;         ///< worst relative hierarchy residual
    double e_minus1 = 0.0;             ///< shift-closure residual
    double pade_truncated_delta = 0.0; ///< |resummed - truncated sum|
    bool pade_condition_flag = false;
    bool pade_pole_flag = false;
};

/// Eigenvalue epsilon at one (gamma, state); the Zeeman-inclusive level is
/// energy() = epsilon + m gamma, exactly.
struct SpectrumPoint {
    StateLabel state{0, 0};
    double gamma = 0.0;
    int w = 1;
    double epsilon = 0.0;
    Method method = Method::pade;
    Diagnostics diagnostics;

    double energy() const noexcept { return epsilon + state.m * gamma; }
};

/// Pipeline controls for a full spectrum evaluation.
struct SpectrumOptions {
    SeriesOptions series;
    PadeOptions pade;
    PlateauOptions plateau;
    int pade_numer_degree = 4;
    int pade_denom_degree = 4;
    bool allow_exact_shortcut = true; ///< use closed forms at gamma=0 / w=0
};

/// Full pipeline: plateau -> hierarchy -> resummation.
SpectrumPoint epsilon_pslet(const DonorPotential& p, const StateLabel& s,
                            const SpectrumOptions& opts = {});

/// -(n_rho + |m| + 1/2)^(-2), the zero-field eigenvalue.
double exact_coulomb(const StateLabel& s);

/// (2 n_rho + |m| + 1) gamma, the pure-magnetic eigenvalue (Zeeman term
/// excluded; add m gamma for the level energy).
double exact_landau(const StateLabel& s, double gamma);

/// One state evaluated across a gamma grid. Points that fail keep a
/// placeholder entry and an error message; the sweep continues.
struct SweepResult {
    StateLabel state{0, 0};
    int w = 1;
    bool include_zeeman = false;
    std::vector<double> grid;
    std::vector<SpectrumPoint> points;
    std::vector<std::string> errors; ///< empty string = point solved

    /// epsilon or energy at grid index i, per the include_zeeman flag.
    double reported(size_t i) const;
    bool ok(size_t i) const { return errors[i].empty(); }
};

SweepResult sweep(int w, const StateLabel& s, const std::vector<double>& grid,
                  bool include_zeeman, const SpectrumOptions& opts = {});

struct Crossing {
    double gamma;
    double energy;
};

/// Sign changes of E_a - E_b on the common grid, each refined by bisection
/// on the continuous solver until |E_a - E_b| < 1e-8.
std::vector<Crossing> find_crossing(const SweepResult& a, const SweepResult& b,
                                    const SpectrumOptions& opts = {});

struct Minimum {
    double gamma;
    double energy;
};

/// Golden-section refinement of an interior minimum of a Zeeman-inclusive
/// sweep; nullopt when the discrete minimum sits on the grid boundary.
std::optional<Minimum> find_minimum(const SweepResult& sr, const SpectrumOptions& opts = {});

/// States sorted by Zeeman-inclusive energy at the given field.
std::vector<StateLabel> landau_ordering(int w, double gamma, std::vector<StateLabel> states,
                                        const SpectrumOptions& opts = {});

} // namespace pslet
