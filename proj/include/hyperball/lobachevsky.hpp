#pragma once

// Lobachevsky function  L(x) = -int_0^x log|2 sin t| dt.
//
// L is odd and pi-periodic. After reducing x to r in [-pi/2, pi/2] we use
//
//   L(r) = r - r log|2r| + sum_{k>=1} zeta(2k) / (k (2k+1)) * r^{2k+1} / pi^{2k}
//
// whose terms shrink at least like 4^-k on the reduced interval.

#include <array>
#include <cmath>
#include <numbers>

#include "hyperball/errors.hpp"

namespace hyperball {

namespace detail {

inline constexpr std::size_t kLobTerms = 64;

// zeta(2k) / (k (2k+1)) for k = 1 .. kLobTerms (index k-1).
inline const std::array<double, kLobTerms>& lob_coefficients() {
    static const std::array<double, kLobTerms> table = [] {
        using std::numbers::pi;
        std::array<double, kLobTerms> c{};
        const double pi2 = pi * pi;
        const std::array<double, 4> exact{
            pi2 / 6.0,
            pi2 * pi2 / 90.0,
            pi2 * pi2 * pi2 / 945.0,
            pi2 * pi2 * pi2 * pi2 / 9450.0,
        };
        for (std::size_t k = 1; k <= kLobTerms; ++k) {
            double zeta = 0.0;
            if (k <= exact.size()) {
                zeta = exact[k - 1];
            } else {
                // n^{-2k} with k >= 5: tail below 1e-18 long before n = 64.
                const double s = 2.0 * static_cast<double>(k);
                double tail = 0.0;
                for (int n = 64; n >= 2; --n) {
                    tail += std::pow(static_cast<double>(n), -s);
                }
                zeta = 1.0 + tail;
            }
            const auto kd = static_cast<double>(k);
            c[k - 1] = zeta / (kd * (2.0 * kd + 1.0));
        }
        return c;
    }();
    return table;
}

// Two-part pi for argument reduction.
inline constexpr double kPiHi = 3.141592653589793116;
inline constexpr double kPiLo = 1.2246467991473532e-16;

/// x - k*pi with k = round(x / pi); result in [-pi/2, pi/2].
inline double reduce_mod_pi(double x) {
    const double k = std::round(x / std::numbers::pi);
    if (k == 0.0) {
        return x;
    }
    return std::fma(-k, kPiLo, std::fma(-k, kPiHi, x));
}

}  // namespace detail

inline double lobachevsky(double x) {
    if (!std::isfinite(x)) {
        throw InvalidInput("lobachevsky: argument must be finite");
    }
    const double r = detail::reduce_mod_pi(x);
    if (r == 0.0) {
        return 0.0;
    }

    const auto& coeff = detail::lob_coefficients();
    const double ratio = (r / std::numbers::pi) * (r / std::numbers::pi);
    double power = r;  // r^{2k+1} / pi^{2k}
    double series = 0.0;
    int small_terms = 0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        power *= ratio;
        const double term = coeff[k] * power;
        series += term;
        if (std::abs(term) < 1e-16) {
            if (++small_terms == 3) {
                break;
            }
        } else {
            small_terms = 0;
        }
    }
    return r - r * std::log(2.0 * std::abs(r)) + series;
}

}  // namespace hyperball
