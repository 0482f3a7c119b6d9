#pragma once

#include <string>

#include "pslet/errors.hpp"

namespace pslet {

/// Quantum numbers of a 2D donor state plus its spectroscopic name.
///
/// The principal number is N = n_rho + |m| + 1 and the letter encodes |m|
/// (s, p, d, f, ...). States with m != 0 carry a "+" or "-" suffix, so
/// (0,0) -> "1s", (0,-2) -> "3d-", (1,2) -> "4d+".
struct StateLabel {
    int n_rho; ///< radial node count, >= 0
    int m;     ///< magnetic quantum number

    StateLabel(int n_rho_, int m_) : n_rho(n_rho_), m(m_)
    {
        if (n_rho < 0)
            throw DomainError("StateLabel: n_rho must be >= 0");
    }

    int l() const noexcept { return m < 0 ? -m : m; }
    int principal() const noexcept { return n_rho + l() + 1; }

    std::string name() const;

    /// Family name without the m-sign suffix: (0,-1) -> "2p".
    std::string family() const;

    /// Accepts spectroscopic names ("2p-", "3d+", "1s") or bare "n_rho,m"
    /// pairs ("0,-1"), with optional surrounding parentheses.
    static StateLabel parse(const std::string& text);

    friend bool operator==(const StateLabel& a, const StateLabel& b) noexcept
    {
        return a.n_rho == b.n_rho && a.m == b.m;
    }
};

} // namespace pslet
