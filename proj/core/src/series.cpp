#include "pslet/series.hpp"

#include <algorithm>
#include <cmath>

#include "pslet/double_double.hpp"

namespace pslet {

namespace {

constexpr double kResidualTolerance = 1e-9;

inline double abs_to_double(double v) { return std::fabs(v); }
inline double abs_to_double(const DoubleDouble& v) { return std::fabs(to_double(v)); }

template <class T>
double max_abs_coeff(const Polynomial<T>& p)
{
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, abs_to_double(c));
    return m;
}

template <class T>
struct GeometryT {
    T rho0{};
    T omega{};
    T beta{};
    T l_tilde{};
    T q{};
};

GeometryT<double> to_scalar_geometry(const PlateauGeometry& g)
{
    return {g.rho0, g.omega, g.beta, g.l_tilde, g.q_factor};
}

// Extended precision re-derives the geometry from the double seed: a few
// Newton steps push the plateau residual to double-double level, then the
// derived quantities are rebuilt in double-double arithmetic.
GeometryT<DoubleDouble> refine_geometry(const PlateauGeometry& g)
{
    using T = DoubleDouble;
    T rho(g.rho0);
    for (int i = 0; i < 4; ++i) {
        const T f = detail::plateau_residual(g.gamma, g.w, g.n_rho, g.l, rho);
        const T df = detail::plateau_residual_derivative(g.gamma, g.w, g.n_rho, g.l, rho);
        if (to_double(df) == 0.0) break;
        rho = rho - f / df;
    }
    const T v1 = detail::potential_derivative(g.gamma, g.w, rho, 1);
    const T v2 = detail::potential_derivative(g.gamma, g.w, rho, 2);
    const T omega = T(2) * sqrt(T(3) + rho * v2 / v1);
    const T beta = -(T(g.n_rho) + T(0.5)) * omega / T(2);
    const T l_tilde = T(g.l) - beta;
    return {rho, omega, beta, l_tilde, l_tilde * l_tilde};
}

template <class T>
std::vector<Polynomial<T>> build_v_terms(double gamma, int w, const GeometryT<T>& g,
                                         int max_half_order, int max_derivative_order)
{
    if (max_half_order < 2)
        throw ConfigError("build_v: max_half_order must be >= 2");
    if (max_half_order + 2 > max_derivative_order)
        throw ConfigError("build_v: half-order " + std::to_string(max_half_order) +
                          " needs potential derivatives beyond the configured maximum " +
                          std::to_string(max_derivative_order));

    std::vector<Polynomial<T>> terms(static_cast<size_t>(max_half_order) + 1);

    Polynomial<T> v0;
    v0.set_coeff(0, T(2) * g.beta);
    v0.set_coeff(2, g.omega * g.omega / T(4));
    terms[0] = v0;

    const T v3 = detail::potential_derivative(gamma, w, g.rho0, 3);
    const T rho5 = g.rho0 * g.rho0 * g.rho0 * g.rho0 * g.rho0;
    Polynomial<T> v1;
    v1.set_coeff(1, T(-4) * g.beta);
    v1.set_coeff(3, T(-4) + rho5 * v3 / (T(6) * g.q));
    terms[1] = v1;

    const T beta_sq = g.beta * g.beta - T(0.25);
    for (int n = 2; n <= max_half_order; ++n) {
        const T sign = T(n % 2 == 0 ? 1 : -1);
        Polynomial<T> vn;
        vn.set_coeff(n, sign * T(2) * g.beta * T(n + 1));
        vn.set_coeff(n - 2, vn.coeff(n - 2) + sign * beta_sq * T(n - 1));

        // B_n = (-1)^n (n+3) + rho0^(n+4) V^(n+2)(rho0) / (Q (n+2)!)
        T term = detail::potential_derivative(gamma, w, g.rho0, n + 2);
        for (int i = 0; i < n + 4; ++i) term = term * g.rho0;
        T fact(1);
        for (int i = 2; i <= n + 2; ++i) fact = fact * T(i);
        const T bn = sign * T(n + 3) + term / (g.q * fact);
        vn.set_coeff(n + 2, bn);
        terms[static_cast<size_t>(n)] = vn;
    }
    return terms;
}

// Order-by-order solver for the logarithmic-derivative ansatz
// u = F exp(U). At half-order h the unknowns are the coefficients of
// W_h = U' piece at that order (degree <= 2h+1), the F correction of
// degree < n_rho, and at even orders one energy coefficient. Each enters
// the matched polynomial identity linearly; scanning powers of x from the
// top down meets each unknown exactly once with a nonzero pivot.
template <class T>
class HierarchySolver {
public:
    HierarchySolver(double gamma, int w, int n_rho, const GeometryT<T>& g, int target_order,
                    int max_derivative_order)
        : n_rho_(n_rho),
          hmax_(2 * target_order + 2),
          geom_(g),
          rho0_sq_(g.rho0 * g.rho0),
          v_(build_v_terms(gamma, w, g, hmax_, max_derivative_order)),
          f_(static_cast<size_t>(hmax_) + 1),
          w_(static_cast<size_t>(hmax_) + 1),
          e_(static_cast<size_t>(hmax_) / 2 + 1, T(0)),
          residual_(static_cast<size_t>(hmax_) + 1, 0.0)
    {
    }

    void solve()
    {
        w_[0] = Polynomial<T>::monomial(1, -geom_.omega / T(2));
        f_[0] = Polynomial<T>::monomial(n_rho_, T(1));

        // v0 - W0' - W0^2; multiplies every F correction.
        base0_ = v_[0] - w_[0].derivative() - w_[0] * w_[0];

        solve_order_zero();

        // Cached products of the now-complete leading factor F_0.
        f0_derivative_ = f_[0].derivative();
        f0_w0_ = f_[0] * w_[0];

        for (int h = 1; h <= hmax_; ++h) solve_order(h);
    }

    int hmax() const { return hmax_; }
    const std::vector<Polynomial<T>>& f() const { return f_; }
    const std::vector<Polynomial<T>>& w() const { return w_; }
    const std::vector<T>& e() const { return e_; }
    T e_minus1() const { return e_minus1_; }
    const std::vector<double>& residuals() const { return residual_; }

private:
    // The matched identity at half-order h with all solved quantities
    // substituted; a perfect solve leaves the zero polynomial. Unsolved
    // entries are zero-valued, so before solving order h this is exactly
    // the known part of the identity.
    Polynomial<T> collect(int h, double* scale_out = nullptr)
    {
        Polynomial<T> acc;
        double scale = 0.0;
        auto add = [&](const Polynomial<T>& term) {
            scale = std::max(scale, max_abs_coeff(term));
            acc += term;
        };

        add(-(f_[h].derivative().derivative()));
        for (int i = 0; i <= h; ++i) {
            const int j = h - i;
            add(f_[i].derivative() * w_[j] * T(-2));
            add(f_[i] * w_[j].derivative() * T(-1));
            add(f_[i] * v_[j]);
        }
        for (int i = 0; i <= h; ++i)
            for (int j = 0; i + j <= h; ++j) add(f_[i] * (w_[j] * w_[h - i - j]) * T(-1));
        for (int n = 1; 2 * n <= h; ++n) add(f_[h - 2 * n] * (rho0_sq_ * e_[n]) * T(-1));

        if (scale_out) *scale_out = scale;
        return acc;
    }

    Polynomial<T> shape_w(int j) const
    {
        Polynomial<T> shape;
        if (j >= 1) shape += f_[0] * Polynomial<T>::monomial(j - 1, T(-j));
        shape += f0_derivative_ * Polynomial<T>::monomial(j, T(-2));
        shape += f0_w0_ * Polynomial<T>::monomial(j, T(-2));
        return shape;
    }

    Polynomial<T> shape_a(int p) const
    {
        Polynomial<T> shape = base0_ * Polynomial<T>::monomial(p, T(1));
        if (p >= 1) shape += w_[0] * Polynomial<T>::monomial(p - 1, T(-2 * p));
        if (p >= 2) shape += Polynomial<T>::monomial(p - 2, T(-p * (p - 1)));
        return shape;
    }

    void apply(Polynomial<T>& acc, const Polynomial<T>& shape, int q, T& slot, int h)
    {
        const T pivot = shape.coeff(q);
        if (abs_to_double(pivot) < 1e-100)
            throw HierarchyError("hierarchy: zero pivot", h, q);
        const T c = -acc.coeff(q) / pivot;
        acc += shape * c;
        slot = c;
    }

    void solve_order_zero()
    {
        double scale = 0.0;
        Polynomial<T> acc = collect(0, &scale);

        std::vector<T> a(static_cast<size_t>(std::max(n_rho_, 0)), T(0));
        for (int q = n_rho_ - 1; q >= 0; --q) {
            T c(0);
            apply(acc, shape_a(q), q, c, 0);
            a[static_cast<size_t>(q)] = c;
        }
        for (int p = 0; p < n_rho_; ++p) f_[0].set_coeff(p, a[static_cast<size_t>(p)]);

        e_minus1_ = acc.coeff(n_rho_) / rho0_sq_;
        finish_order(0, scale);
    }

    void solve_order(int h)
    {
        double scale = 0.0;
        Polynomial<T> acc = collect(h, &scale);

        std::vector<T> wcoef(static_cast<size_t>(2 * h + 2), T(0));
        std::vector<T> acoef(static_cast<size_t>(std::max(n_rho_, 0)), T(0));

        const int top = n_rho_ + 2 * h + 2;
        for (int q = top; q >= 0; --q) {
            if (q >= n_rho_ + 1) {
                const int j = q - n_rho_ - 1;
                if (j > 2 * h + 1) continue;
                apply(acc, shape_w(j), q, wcoef[static_cast<size_t>(j)], h);
            } else if (q == n_rho_) {
                if (h % 2 == 0) {
                    const Polynomial<T> shape = f_[0] * (-rho0_sq_);
                    apply(acc, shape, q, e_[static_cast<size_t>(h / 2)], h);
                }
                // odd orders: closure equation, left as a residual check
            } else {
                apply(acc, shape_a(q), q, acoef[static_cast<size_t>(q)], h);
            }
        }

        Polynomial<T> wh;
        for (int j = 0; j <= 2 * h + 1; ++j) wh.set_coeff(j, wcoef[static_cast<size_t>(j)]);
        w_[h] = wh;
        Polynomial<T> fh;
        for (int p = 0; p < n_rho_; ++p) fh.set_coeff(p, acoef[static_cast<size_t>(p)]);
        f_[h] = fh;

        finish_order(h, scale);
    }

    void finish_order(int h, double scale)
    {
        // Recompute from scratch with the solved values in place; anything
        // left over is the honest matching residual of this order.
        const double leftover = max_abs_coeff(collect(h));
        residual_[static_cast<size_t>(h)] = leftover / std::max(scale, 1e-300);
    }

    int n_rho_;
    int hmax_;
    GeometryT<T> geom_;
    T rho0_sq_;
    std::vector<Polynomial<T>> v_;
    std::vector<Polynomial<T>> f_;
    std::vector<Polynomial<T>> w_;
    std::vector<T> e_;
    T e_minus1_{};
    std::vector<double> residual_;
    Polynomial<T> f0_derivative_;
    Polynomial<T> f0_w0_;
    Polynomial<T> base0_;
};

template <class T>
HierarchyResult run_hierarchy(const DonorPotential& p, const PlateauGeometry& g,
                              const GeometryT<T>& geom, int n_rho, const SeriesOptions& opts)
{
    HierarchySolver<T> solver(p.gamma, p.w, n_rho, geom, opts.target_order,
                              opts.max_derivative_order);
    solver.solve();

    HierarchyResult out;
    EnergySeries& es = out.energies;
    es.e_minus2 = to_double(T(1) / (geom.rho0 * geom.rho0) +
                            detail::potential_value(p.gamma, p.w, geom.rho0) / geom.q);
    es.e_minus1 = to_double(solver.e_minus1());
    es.e_n.resize(static_cast<size_t>(opts.target_order) + 1);
    for (int k = 0; k <= opts.target_order; ++k)
        es.e_n[static_cast<size_t>(k)] = to_double(solver.e()[static_cast<size_t>(k) + 1]);
    es.residual_per_order = solver.residuals();
    es.residual_ok = std::all_of(es.residual_per_order.begin(), es.residual_per_order.end(),
                                 [](double r) { return r <= kResidualTolerance; });

    WavefunctionCoefficients& wc = out.wavefunction;
    wc.n_rho = n_rho;
    wc.l = g.l;
    wc.l_tilde = to_double(geom.l_tilde);
    wc.trust_region = opts.trust_region;
    const int hmax = solver.hmax();
    wc.d_coeffs.resize(static_cast<size_t>(hmax) + 1);
    for (int n = 0; n <= hmax; ++n) {
        auto& row = wc.d_coeffs[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 2, 0.0);
        for (int m = 1; m <= n + 1; ++m)
            row[static_cast<size_t>(m)] = to_double(solver.w()[static_cast<size_t>(n)].coeff(2 * m - 1));
    }
    wc.c_coeffs.resize(static_cast<size_t>(hmax));
    for (int n = 0; n < hmax; ++n) {
        auto& row = wc.c_coeffs[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 2, 0.0);
        for (int m = 0; m <= n + 1; ++m)
            row[static_cast<size_t>(m)] = to_double(solver.w()[static_cast<size_t>(n) + 1].coeff(2 * m));
    }
    wc.a_coeffs.resize(static_cast<size_t>(hmax) + 1);
    for (int n = 0; n <= hmax; ++n) {
        auto& row = wc.a_coeffs[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(std::max(n_rho, 0)), 0.0);
        for (int pw = 0; pw < n_rho; ++pw)
            row[static_cast<size_t>(pw)] = to_double(solver.f()[static_cast<size_t>(n)].coeff(pw));
    }
    return out;
}

} // namespace

double EnergySeries::truncated_sum(double l_tilde) const
{
    double sum = l_tilde * l_tilde * e_minus2;
    double inv = 1.0;
    for (const double ek : e_n) {
        sum += ek * inv;
        inv /= l_tilde;
    }
    return sum;
}

HalfPowerSeries build_v(const DonorPotential& p, const PlateauGeometry& g, int max_half_order,
                        int max_derivative_order)
{
    HalfPowerSeries out;
    out.terms = build_v_terms(p.gamma, p.w, to_scalar_geometry(g), max_half_order,
                              max_derivative_order);
    return out;
}

HierarchyResult solve_hierarchy(const DonorPotential& p, const PlateauGeometry& g, int n_rho,
                                const SeriesOptions& opts)
{
    if (n_rho != g.n_rho)
        throw DomainError("solve_hierarchy: geometry was solved for n_rho = " +
                          std::to_string(g.n_rho));
    if (p.gamma != g.gamma || p.w != g.w)
        throw DomainError("solve_hierarchy: geometry belongs to a different potential");
    if (opts.target_order < 0 || opts.target_order % 2 != 0)
        throw ConfigError("solve_hierarchy: target_order must be even and >= 0");

    if (opts.extended_precision)
        return run_hierarchy<DoubleDouble>(p, g, refine_geometry(g), n_rho, opts);
    return run_hierarchy<double>(p, g, to_scalar_geometry(g), n_rho, opts);
}

double eval_wavefunction(const WavefunctionCoefficients& wc, const PlateauGeometry& g, double x)
{
    if (!std::isfinite(x) || std::fabs(x) > wc.trust_region)
        throw DomainError("eval_wavefunction: |x| exceeds the trust region");

    const double lt = wc.l_tilde;
    double u_exponent = 0.0;

    // Integrated odd pieces: sum_m D x^(2m-1) -> x^(2m)/(2m).
    for (size_t n = 0; n < wc.d_coeffs.size(); ++n) {
        double inner = 0.0;
        for (size_t m = 1; m < wc.d_coeffs[n].size(); ++m)
            inner += wc.d_coeffs[n][m] * std::pow(x, 2.0 * static_cast<double>(m)) /
                     (2.0 * static_cast<double>(m));
        u_exponent += inner * std::pow(lt, -0.5 * static_cast<double>(n));
    }
    // Integrated even pieces: sum_m C x^(2m) -> x^(2m+1)/(2m+1).
    for (size_t n = 0; n < wc.c_coeffs.size(); ++n) {
        double inner = 0.0;
        for (size_t m = 0; m < wc.c_coeffs[n].size(); ++m)
            inner += wc.c_coeffs[n][m] * std::pow(x, 2.0 * static_cast<double>(m) + 1.0) /
                     (2.0 * static_cast<double>(m) + 1.0);
        u_exponent += inner * std::pow(lt, -0.5 * static_cast<double>(n + 1));
    }

    double f = std::pow(x, wc.n_rho);
    for (size_t n = 0; n < wc.a_coeffs.size(); ++n) {
        double inner = 0.0;
        for (size_t pw = 0; pw < wc.a_coeffs[n].size(); ++pw)
            inner += wc.a_coeffs[n][pw] * std::pow(x, static_cast<double>(pw));
        f += inner * std::pow(lt, -0.5 * static_cast<double>(n));
    }

    (void)g;
    return f * std::exp(u_exponent);
}

} // namespace pslet
