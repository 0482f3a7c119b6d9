#pragma once

#include <stdexcept>
#include <string>

namespace pslet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or object state (bad radius, bad quantum numbers, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Option or truncation order outside the supported range.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A root or eigenvalue bracket could not be established.
class BracketingError : public Error {
public:
    using Error::Error;
};

/// Shooting integration failed (overflow, unusable mesh).
class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Sweep grids passed to a comparison do not match.
class GridError : public Error {
public:
    using Error::Error;
};

/// Resummed denominator vanishes at or near the evaluation point.
class PadePoleError : public Error {
public:
    using Error::Error;
};

/// Zero pivot in the order-by-order coefficient solve.
class HierarchyError : public Error {
public:
    HierarchyError(const std::string& msg, int half_order, int power)
        : Error(msg + " (half-order " + std::to_string(half_order) + ", x^" +
                std::to_string(power) + ")"),
          half_order_(half_order),
          power_(power)
    {
    }

    int half_order() const noexcept { return half_order_; }
    int power() const noexcept { return power_; }

private:
    int half_order_;
    int power_;
};

} // namespace pslet
