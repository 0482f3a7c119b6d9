#include "pslet/pade.hpp"

#include <algorithm>
#include <cmath>

namespace pslet {

namespace {

// Gaussian elimination with partial pivoting on a dense k x k system.
// Returns false when the chosen pivot falls below tol relative to the
// largest matrix element.
bool solve_linear(std::vector<double> a, std::vector<double> b, int k, double tol,
                  std::vector<double>& out)
{
    double amax = 0.0;
    for (const double v : a) amax = std::max(amax, std::fabs(v));
    if (amax == 0.0) return false;

    for (int col = 0; col < k; ++col) {
        int pivot_row = col;
        for (int r = col + 1; r < k; ++r)
            if (std::fabs(a[r * k + col]) > std::fabs(a[pivot_row * k + col])) pivot_row = r;
        if (std::fabs(a[pivot_row * k + col]) < tol * amax) return false;
        if (pivot_row != col) {
            for (int c = 0; c < k; ++c) std::swap(a[col * k + c], a[pivot_row * k + c]);
            std::swap(b[col], b[pivot_row]);
        }
        for (int r = col + 1; r < k; ++r) {
            const double factor = a[r * k + col] / a[col * k + col];
            for (int c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
            b[r] -= factor * b[col];
        }
    }

    out.assign(k, 0.0);
    for (int r = k - 1; r >= 0; --r) {
        double sum = b[r];
        for (int c = r + 1; c < k; ++c) sum -= a[r * k + c] * out[c];
        out[r] = sum / a[r * k + r];
    }
    return true;
}

double series_coeff(const std::vector<double>& s, int i)
{
    return (i >= 0 && i < static_cast<int>(s.size())) ? s[static_cast<size_t>(i)] : 0.0;
}

// Attempts the [n,m] entry of the table; the denominator coefficients
// solve the linear matching conditions at orders m+1 .. m+n.
bool try_entry(const std::vector<double>& series, int m, int n, double pivot_tol,
               RationalApproximant& out)
{
    std::vector<double> q{1.0};
    if (n > 0) {
        std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
        std::vector<double> b(static_cast<size_t>(n), 0.0);
        for (int r = 0; r < n; ++r) {
            for (int j = 1; j <= n; ++j) a[r * n + (j - 1)] = series_coeff(series, m + 1 + r - j);
            b[r] = -series_coeff(series, m + 1 + r);
        }
        std::vector<double> sol;
        if (!solve_linear(std::move(a), std::move(b), n, pivot_tol, sol)) return false;
        q.insert(q.end(), sol.begin(), sol.end());
    }

    std::vector<double> p(static_cast<size_t>(m) + 1, 0.0);
    for (int i = 0; i <= m; ++i) {
        double sum = 0.0;
        for (int j = 0; j <= std::min(i, n); ++j) sum += q[static_cast<size_t>(j)] * series_coeff(series, i - j);
        p[static_cast<size_t>(i)] = sum;
    }
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();

    out.numerator = std::move(p);
    out.denominator = std::move(q);
    out.condition_flag = false;
    return true;
}

bool reexpansion_matches(const RationalApproximant& r, const std::vector<double>& series,
                         int count, double tol)
{
    const std::vector<double> re = reexpand(r, count);
    double scale = 0.0;
    for (int i = 0; i < count; ++i) scale = std::max(scale, std::fabs(series_coeff(series, i)));
    const double limit = tol * std::max(scale, 1e-300);
    for (int i = 0; i < count; ++i)
        if (std::fabs(re[static_cast<size_t>(i)] - series_coeff(series, i)) > limit) return false;
    return true;
}

double horner(const std::vector<double>& c, double z)
{
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

} // namespace

double RationalApproximant::evaluate(double z) const
{
    return horner(numerator, z) / horner(denominator, z);
}

std::vector<double> reexpand(const RationalApproximant& r, int count)
{
    std::vector<double> t(static_cast<size_t>(std::max(count, 0)), 0.0);
    for (int i = 0; i < count; ++i) {
        double sum = i < static_cast<int>(r.numerator.size()) ? r.numerator[static_cast<size_t>(i)] : 0.0;
        const int jmax = std::min<int>(i, static_cast<int>(r.denominator.size()) - 1);
        for (int j = 1; j <= jmax; ++j)
            sum -= r.denominator[static_cast<size_t>(j)] * t[static_cast<size_t>(i - j)];
        t[static_cast<size_t>(i)] = sum; // denominator is monic at z = 0
    }
    return t;
}

RationalApproximant pade_from_series(const std::vector<double>& series, int numer_degree,
                                     int denom_degree, const PadeOptions& opts)
{
    if (numer_degree < 0 || denom_degree < 0)
        throw DomainError("pade_from_series: degrees must be non-negative");
    if (static_cast<int>(series.size()) < numer_degree + denom_degree + 1)
        throw DomainError("pade_from_series: series too short for the requested degrees");

    const int match_count = numer_degree + denom_degree + 1;

    // A singular matching system means this table entry degenerates into a
    // lower one; retreat down the staircase until an entry both solves and
    // reproduces the series.
    int m = numer_degree;
    int n = denom_degree;
    while (true) {
        RationalApproximant candidate;
        if (try_entry(series, m, n, opts.pivot_tolerance, candidate) &&
            reexpansion_matches(candidate, series, match_count, opts.reexpand_tolerance))
            return candidate;
        if (m == 0 && n == 0) break;
        m = std::max(0, m - 1);
        n = std::max(0, n - 1);
    }

    RationalApproximant flagged;
    flagged.numerator = {series_coeff(series, 0)};
    flagged.denominator = {1.0};
    flagged.condition_flag = true;
    return flagged;
}

double assemble_epsilon(const PlateauGeometry& g, const EnergySeries& es,
                        const RationalApproximant& r, const PadeOptions& opts)
{
    if (r.condition_flag) return es.truncated_sum(g.l_tilde);

    const double z = 1.0 / g.l_tilde;
    const double z_top = opts.pole_search_factor * z;

    double qscale = 0.0;
    for (const double c : r.denominator) qscale = std::max(qscale, std::fabs(c));

    // Reject real denominator zeros at or near the evaluation point.
    const int samples = 512;
    double prev = horner(r.denominator, z_top * 1.0 / samples);
    if (std::fabs(prev) < 1e-12 * qscale)
        throw PadePoleError("pade: denominator vanishes near the evaluation point");
    for (int i = 2; i <= samples; ++i) {
        const double cur = horner(r.denominator, z_top * i / samples);
        if ((prev < 0.0) != (cur < 0.0) || std::fabs(cur) < 1e-12 * qscale)
            throw PadePoleError("pade: denominator vanishes near the evaluation point");
        prev = cur;
    }

    return g.l_tilde * g.l_tilde * es.e_minus2 + r.evaluate(z);
}

} // namespace pslet
