#pragma once

#include <iosfwd>
#include <vector>

#include "pslet/potential.hpp"
#include "pslet/state.hpp"

namespace pslet {

/// Mesh and bracket controls for the shooting integrator. Zero-valued
/// fields are resolved from the potential and state at solve time.
struct ShootingConfig {
    double rho_min = 1e-6;
    double rho_max = 0.0; ///< <= 0 selects max(30, 12/sqrt(max(gamma, 0.05)))
    int step_count = 200000;
    double eps_lo = 0.0; ///< eigenvalue bracket; lo >= hi selects exact-limit bounds
    double eps_hi = 0.0;
};

/// Converged shooting solution for one state.
struct OracleSolution {
    double epsilon = 0.0;        ///< Richardson-combined eigenvalue
    double epsilon_fine = 0.0;   ///< raw eigenvalue at step_count
    double epsilon_coarse = 0.0; ///< raw eigenvalue at step_count/2
    double match_defect = 0.0;   ///< normalized log-derivative mismatch
    int node_count = 0;          ///< interior zeros of the assembled solution
    ShootingConfig config;       ///< resolved configuration actually used
};

/// Reference eigenvalue of the radial problem
///   -u'' + [(m^2 - 1/4)/rho^2 + V(rho)] u = epsilon u
/// by two-sided shooting with node counting. Independent of the series
/// pipeline; used to pin expected values.
OracleSolution shoot(const DonorPotential& p, const StateLabel& s, ShootingConfig cfg = {});

/// Convenience wrapper returning only the eigenvalue.
double shoot_epsilon(const DonorPotential& p, const StateLabel& s, ShootingConfig cfg = {});

/// One committed reference record: eigenvalue plus the mesh it came from.
struct OracleFixtureRecord {
    StateLabel state{0, 0};
    double gamma = 0.0;
    int w = 1;
    double epsilon = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    int step_count = 0;
};

/// Parses the fixture table written by the `oracle` CLI command: CSV with
/// a header row; lines starting with '#' are ignored.
std::vector<OracleFixtureRecord> read_oracle_fixture(std::istream& in);
std::vector<OracleFixtureRecord> read_oracle_fixture_file(const std::string& path);

} // namespace pslet
