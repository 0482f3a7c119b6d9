#include "pslet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace pslet {

namespace {

// Right-hand side f(rho) of u'' = f(rho) u.
struct RadialRhs {
    double centrifugal; // m^2 - 1/4
    double quarter_g2;  // gamma^2 / 4
    double w2;          // 2 w
    double eps;

    double operator()(double rho) const
    {
        return centrifugal / (rho * rho) + quarter_g2 * rho * rho - w2 / rho - eps;
    }
};

struct StepResult {
    double u;
    double v; // du/drho
};

// One classical RK4 step of (u, v)' = (v, f u); h may be negative.
inline StepResult rk4_step(const RadialRhs& f, double rho, double u, double v, double h)
{
    const double f0 = f(rho);
    const double fm = f(rho + 0.5 * h);
    const double f1 = f(rho + h);

    const double k1u = v;
    const double k1v = f0 * u;
    const double k2u = v + 0.5 * h * k1v;
    const double k2v = fm * (u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v;
    const double k3v = fm * (u + 0.5 * h * k2u);
    const double k4u = v + h * k3v;
    const double k4v = f1 * (u + h * k3u);

    return {u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
            v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

inline void renormalize(double& u, double& v)
{
    const double s = std::max(std::fabs(u), std::fabs(v));
    if (s > 1e100) {
        u /= s;
        v /= s;
    }
}

// Small-radius series u = rho^s sum_k c_k rho^k with s = |m| + 1/2. The
// recursion follows from matching powers in the radial equation; the k = 1
// coefficient is the familiar -2w/(2|m| + 1) cusp term.
struct OriginSeries {
    double s;
    double coeff[11];

    OriginSeries(int l, int w, double gamma, double eps) : s(l + 0.5)
    {
        coeff[0] = 1.0;
        const double g2q = 0.25 * gamma * gamma;
        for (int k = 1; k <= 10; ++k) {
            double num = -2.0 * w * coeff[k - 1];
            if (k >= 2) num -= eps * coeff[k - 2];
            if (k >= 4) num += g2q * coeff[k - 4];
            coeff[k] = num / (k * (2.0 * s + k - 1.0));
        }
    }

    StepResult eval(double rho) const
    {
        double u = 0.0;
        double v = 0.0;
        double rp = std::pow(rho, s);
        for (int k = 0; k <= 10; ++k) {
            u += coeff[k] * rp;
            v += (s + k) * coeff[k] * rp / rho;
            rp *= rho;
        }
        return {u, v};
    }
};

struct Mesh {
    double rho_min;
    double h;
    int n; // intervals; grid points 0..n

    double rho(int i) const { return rho_min + i * h; }
};

struct Problem {
    double gamma;
    int w;
    int l;
    int n_rho;
    Mesh mesh;
    int start_index; // series/RK hand-off grid index

    RadialRhs rhs(double eps) const
    {
        return {static_cast<double>(l) * l - 0.25, 0.25 * gamma * gamma,
                2.0 * static_cast<double>(w), eps};
    }
};

void check_finite(double u, double v)
{
    if (!std::isfinite(u) || !std::isfinite(v))
        throw IntegrationError("oracle: integration overflowed; try a smaller rho_max");
}

// Left solution integrated across [start_index, stop_index], counting sign
// changes along the way. Returns final (u, v).
StepResult integrate_left(const Problem& prob, double eps, int stop_index, int* nodes)
{
    const RadialRhs f = prob.rhs(eps);
    const OriginSeries series(prob.l, prob.w, prob.gamma, eps);

    StepResult y = series.eval(prob.mesh.rho(prob.start_index));
    double last_sign = y.u > 0.0 ? 1.0 : -1.0;
    int count = 0;

    for (int i = prob.start_index; i < stop_index; ++i) {
        y = rk4_step(f, prob.mesh.rho(i), y.u, y.v, prob.mesh.h);
        renormalize(y.u, y.v);
        if (y.u != 0.0) {
            const double sign = y.u > 0.0 ? 1.0 : -1.0;
            if (sign != last_sign) ++count;
            last_sign = sign;
        }
    }
    check_finite(y.u, y.v);
    if (nodes) *nodes = count;
    return y;
}

// Right solution integrated inward from rho_max down to stop_index.
StepResult integrate_right(const Problem& prob, double eps, int stop_index, int* nodes)
{
    const RadialRhs f = prob.rhs(eps);
    const double rho_max = prob.mesh.rho(prob.mesh.n);

    double log_deriv;
    if (prob.gamma > 0.0) {
        // u ~ rho^a exp(-gamma rho^2 / 4) with a = eps/gamma - 1/2
        log_deriv = (eps / prob.gamma - 0.5) / rho_max - 0.5 * prob.gamma * rho_max;
    } else {
        // u ~ rho^a exp(-kappa rho) (1 + c_1/rho + ...) with a = w/kappa.
        // For Coulomb bound states this tail series terminates, so a few
        // terms make the outer boundary condition essentially exact.
        const double kappa = std::sqrt(std::max(-eps, 1e-30));
        const double a = prob.w / kappa;
        const double m2 = static_cast<double>(prob.l) * prob.l;
        double c = 1.0;
        double f = 1.0;
        double fp = a / rho_max;
        double rpow = 1.0;
        for (int k = 1; k <= 4; ++k) {
            c *= -((a - k + 1.0) * (a - k) - m2 + 0.25) / (2.0 * kappa * k);
            rpow /= rho_max;
            f += c * rpow;
            fp += (a - k) * c * rpow / rho_max;
        }
        log_deriv = -kappa + fp / f;
    }

    StepResult y{1.0, log_deriv};
    double last_sign = 1.0;
    int count = 0;

    for (int i = prob.mesh.n; i > stop_index; --i) {
        y = rk4_step(f, prob.mesh.rho(i), y.u, y.v, -prob.mesh.h);
        renormalize(y.u, y.v);
        if (y.u != 0.0) {
            const double sign = y.u > 0.0 ? 1.0 : -1.0;
            if (sign != last_sign) ++count;
            last_sign = sign;
        }
    }
    check_finite(y.u, y.v);
    if (nodes) *nodes = count;
    return y;
}

int count_nodes_full(const Problem& prob, double eps)
{
    int nodes = 0;
    integrate_left(prob, eps, prob.mesh.n, &nodes);
    return nodes;
}

// Grid index of the outermost classical turning point, clamped away from
// both ends; falls back to n/3 when the orbit never turns.
int matching_index(const Problem& prob, double eps)
{
    const RadialRhs f = prob.rhs(eps);
    const int lo = prob.start_index + 16;
    const int hi = prob.mesh.n - 16;
    int im = -1;
    for (int i = hi; i >= lo; --i) {
        if (f(prob.mesh.rho(i)) <= 0.0) {
            im = i;
            break;
        }
    }
    if (im < 0) im = std::max(lo, prob.mesh.n / 3);
    return std::clamp(im, lo, hi);
}

struct MatchResult {
    double defect; // normalized Wronskian of left and right solutions
    int nodes;
};

MatchResult match_at(const Problem& prob, double eps)
{
    const int im = matching_index(prob, eps);
    int nodes_left = 0;
    int nodes_right = 0;
    const StepResult yl = integrate_left(prob, eps, im, &nodes_left);
    const StepResult yr = integrate_right(prob, eps, im, &nodes_right);

    const double a = yl.v * yr.u;
    const double b = yr.v * yl.u;
    const double scale = std::fabs(a) + std::fabs(b) + std::numeric_limits<double>::min();
    return {(a - b) / scale, nodes_left + nodes_right};
}

double solve_on_mesh(const Problem& prob, double lo, double hi, MatchResult* out)
{
    // Phase 1: node-count bisection isolates the n-th eigenvalue. The count
    // of interior zeros of the left solution jumps from n to n+1 as eps
    // crosses it.
    double a = lo;
    double b = hi;
    const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
    for (int iter = 0; iter < 80 && (b - a) > 1e-7 * scale; ++iter) {
        const double mid = 0.5 * (a + b);
        if (count_nodes_full(prob, mid) > prob.n_rho)
            b = mid;
        else
            a = mid;
    }

    // Phase 2: the matching defect vanishes at the two-sided eigenvalue,
    // which sits a boundary-condition-sized offset away from the phase 1
    // point; pad the bracket until the defect changes sign, then bisect it
    // down to rounding level.
    double pad = b - a;
    MatchResult ma{};
    MatchResult mb{};
    bool straddles = false;
    for (int attempt = 0; attempt < 5; ++attempt) {
        const double pa = std::max(lo, a - pad);
        const double pb = std::min(hi, b + pad);
        ma = match_at(prob, pa);
        mb = match_at(prob, pb);
        if ((ma.defect < 0.0) != (mb.defect < 0.0)) {
            a = pa;
            b = pb;
            straddles = true;
            break;
        }
        pad *= 8.0;
    }

    if (straddles) {
        for (int iter = 0; iter < 80 && (b - a) > 4e-16 * scale; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            const MatchResult mm = match_at(prob, mid);
            if ((mm.defect < 0.0) == (ma.defect < 0.0)) {
                a = mid;
                ma = mm;
            } else {
                b = mid;
                mb = mm;
            }
        }
    }

    const bool pick_a = std::fabs(ma.defect) < std::fabs(mb.defect);
    if (out) *out = pick_a ? ma : mb;
    return pick_a ? a : b;
}

Problem make_problem(const DonorPotential& p, const StateLabel& s, const ShootingConfig& cfg,
                     int step_count)
{
    Problem prob{};
    prob.gamma = p.gamma;
    prob.w = p.w;
    prob.l = s.l();
    prob.n_rho = s.n_rho;
    prob.mesh.rho_min = cfg.rho_min;
    prob.mesh.h = (cfg.rho_max - cfg.rho_min) / step_count;
    prob.mesh.n = step_count;

    // Hand the integration off to the series far enough out that the
    // centrifugal term is resolved by the fixed step.
    const double rho_start = std::max(cfg.rho_min, 60.0 * prob.mesh.h);
    prob.start_index =
        std::min(prob.mesh.n / 4, static_cast<int>(std::ceil((rho_start - cfg.rho_min) / prob.mesh.h)));
    return prob;
}

} // namespace

OracleSolution shoot(const DonorPotential& p, const StateLabel& s, ShootingConfig cfg)
{
    if (cfg.rho_max <= 0.0)
        cfg.rho_max = std::max(30.0, 12.0 / std::sqrt(std::max(p.gamma, 0.05)));
    if (cfg.rho_min <= 0.0 || cfg.rho_min >= cfg.rho_max)
        throw DomainError("oracle: require 0 < rho_min < rho_max");
    if (cfg.step_count < 10000 || cfg.step_count > 10000000)
        throw ConfigError("oracle: step_count outside [1e4, 1e7]");

    const int l = s.l();
    const double coulomb = -1.0 / ((s.n_rho + l + 0.5) * (s.n_rho + l + 0.5));
    const double landau = (2 * s.n_rho + l + 1) * p.gamma;
    if (cfg.eps_lo >= cfg.eps_hi) {
        cfg.eps_lo = (p.w == 1 ? coulomb : landau) - 1.0;
        cfg.eps_hi = p.gamma > 0.0 ? landau + 1.0 : -1e-9;
    }

    const Problem fine = make_problem(p, s, cfg, cfg.step_count);
    const Problem coarse = make_problem(p, s, cfg, cfg.step_count / 2);

    // Make sure the bracket straddles the target eigenvalue; widen a few
    // times before giving up.
    double lo = cfg.eps_lo;
    double hi = cfg.eps_hi;
    double span = hi - lo;
    for (int k = 0; k < 6 && count_nodes_full(fine, lo) > s.n_rho; ++k) lo -= span * (1 << k);
    for (int k = 0; k < 6 && count_nodes_full(fine, hi) <= s.n_rho; ++k) {
        if (p.gamma == 0.0 && p.w == 1) break; // bound spectrum tops out at 0
        hi += span * (1 << k);
    }
    if (count_nodes_full(fine, lo) > s.n_rho || count_nodes_full(fine, hi) <= s.n_rho)
        throw BracketingError("oracle: node count " + std::to_string(s.n_rho) +
                              " unreachable within eigenvalue bracket");

    MatchResult fine_match{};
    const double eps_fine = solve_on_mesh(fine, lo, hi, &fine_match);
    const double eps_coarse = solve_on_mesh(coarse, lo, hi, nullptr);

    if (fine_match.nodes != s.n_rho)
        throw BracketingError("oracle: converged solution has " +
                              std::to_string(fine_match.nodes) + " nodes, expected " +
                              std::to_string(s.n_rho));

    OracleSolution sol;
    sol.epsilon_fine = eps_fine;
    sol.epsilon_coarse = eps_coarse;
    sol.epsilon = eps_fine + (eps_fine - eps_coarse) / 15.0; // O(h^4) extrapolation
    sol.match_defect = fine_match.defect;
    sol.node_count = fine_match.nodes;
    sol.config = cfg;
    return sol;
}

double shoot_epsilon(const DonorPotential& p, const StateLabel& s, ShootingConfig cfg)
{
    return shoot(p, s, cfg).epsilon;
}

std::vector<OracleFixtureRecord> read_oracle_fixture(std::istream& in)
{
    std::vector<OracleFixtureRecord> records;
    std::string line;
    std::vector<std::string> header;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) fields.push_back(item);
        if (header.empty()) {
            header = fields;
            continue;
        }

        auto field = [&](const std::string& name) -> const std::string& {
            for (size_t i = 0; i < header.size() && i < fields.size(); ++i)
                if (header[i] == name) return fields[i];
            throw DomainError("oracle fixture: missing column '" + name + "'");
        };

        OracleFixtureRecord rec{StateLabel(std::stoi(field("n_rho")), std::stoi(field("m"))),
                                std::stod(field("gamma")),
                                std::stoi(field("w")),
                                std::stod(field("epsilon")),
                                std::stod(field("rho_min")),
                                std::stod(field("rho_max")),
                                std::stoi(field("step_count"))};
        records.push_back(rec);
    }
    return records;
}

std::vector<OracleFixtureRecord> read_oracle_fixture_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("oracle fixture: cannot open " + path);
    return read_oracle_fixture(in);
}

} // namespace pslet
