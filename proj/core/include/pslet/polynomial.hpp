#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pslet {

/// Dense real polynomial in one variable; index = power. Trailing exact
/// zeros are trimmed so the zero polynomial has an empty coefficient list.
template <class T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int power, const T& coeff = T(1))
    {
        if (coeff == T(0)) return {};
        std::vector<T> c(static_cast<size_t>(power) + 1, T(0));
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    T coeff(int power) const
    {
        if (power < 0 || power > degree()) return T(0);
        return coeffs_[static_cast<size_t>(power)];
    }

    void set_coeff(int power, const T& value)
    {
        if (power >= static_cast<int>(coeffs_.size()))
            coeffs_.resize(static_cast<size_t>(power) + 1, T(0));
        coeffs_[static_cast<size_t>(power)] = value;
        trim();
    }

    T operator()(const T& x) const
    {
        T acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = T(static_cast<int>(i)) * coeffs_[i];
        return Polynomial(std::move(c));
    }

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const
    {
        if (coeffs_.empty()) return {};
        std::vector<T> c(coeffs_.size() + 1, T(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            c[i + 1] = coeffs_[i] / T(static_cast<int>(i) + 1);
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
        for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + other.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other)
    {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
        for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - other.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s)
    {
        if (s == T(0)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c = c * s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using Poly = Polynomial<double>;

} // namespace pslet
