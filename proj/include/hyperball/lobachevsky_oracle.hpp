#pragma once

// Reference evaluation of the Lobachevsky function straight from its
// integral definition. Shares nothing with the series in lobachevsky.hpp and
// is used to cross-check it.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hyperball/errors.hpp"
#include "hyperball/quadrature.hpp"

namespace hyperball {

/// -int_0^x log|2 sin t| dt for x in [0, pi] by adaptive Gauss-Kronrod.
/// The log singularities at t = 0 and t = pi sit on segment ends; the
/// partition is pre-split geometrically toward both of them.
inline double lob_quadrature_oracle(double x, double abs_tol) {
    using std::numbers::pi;
    if (!(x >= 0.0 && x <= pi)) {
        throw DomainError("lob_quadrature_oracle: x must lie in [0, pi]");
    }
    if (!(abs_tol > 0.0)) {
        throw InvalidInput("lob_quadrature_oracle: tolerance must be positive");
    }
    if (x == 0.0) {
        return 0.0;
    }

    // pi - t loses the low bits of pi; add them back.
    constexpr double pi_lo = 1.2246467991473532e-16;
    auto integrand = [](double t) {
        const double s = t <= 0.5 * pi ? std::sin(t) : std::sin((pi - t) + pi_lo);
        return -std::log(2.0 * s);
    };

    std::vector<double> cuts{0.0, x};
    for (double w = 1e-6; w < 0.25; w *= 16.0) {
        cuts.push_back(w);
        cuts.push_back(pi - w);
    }
    cuts.push_back(0.5 * pi);
    std::erase_if(cuts, [x](double c) { return c < 0.0 || c > x; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Kronrod-vs-Gauss differences overstate the error of the Kronrod sum;
    // a tenth of the budget still leaves margin near the log endpoints.
    return integrate_adaptive(integrand, cuts, 0.1 * abs_tol).value;
}

}  // namespace hyperball
