#pragma once

#include <cmath>
#include <concepts>
#include <sstream>

#include "hyperball/density.hpp"
#include "hyperball/errors.hpp"

namespace hyperball {

struct OptimizationResult {
    double p_opt;
    double delta_opt;
    int iterations;
    double lo;
    double hi;
    double tol;
};

inline constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

/// Worst-case iteration count of golden-section search on [lo, hi].
inline int golden_iteration_bound(double lo, double hi, double tol) {
    return static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(1.0 / kInvGolden))) + 2;
}

/// Golden-section search for the maximiser of a strictly unimodal f on
/// [lo, hi]. The returned bracket has width <= tol; p_opt is its midpoint and
/// delta_opt = f(p_opt).
template <class F>
    requires std::regular_invocable<const F&, double>
OptimizationResult maximize_unimodal(const F& f, double lo, double hi, double tol, int max_iter) {
    if (!(lo < hi)) {
        throw InvalidInput("maximize_unimodal: need lo < hi");
    }
    if (!(tol > 0.0)) {
        throw InvalidInput("maximize_unimodal: tolerance must be positive");
    }

    double a = lo;
    double b = hi;
    double x1 = b - kInvGolden * (b - a);
    double x2 = a + kInvGolden * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    int iter = 0;
    while (b - a > tol) {
        if (iter >= max_iter) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "maximize_unimodal: no convergence after " << iter << " iterations, bracket ["
                << a << ", " << b << "]";
            throw ConvergenceFailure(msg.str(), a, b);
        }
        ++iter;
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvGolden * (b - a);
            f1 = f(x1);
        }
    }
    const double mid = 0.5 * (a + b);
    return OptimizationResult{mid, f(mid), iter, a, b, tol};
}

inline constexpr double kOptimumLeftEdge = 6.0 + 1e-6;
inline constexpr double kDefaultOptimizeTol = 1e-7;

/// Maximiser of delta(p) on (6, inf).
inline OptimizationResult find_optimal_p(double tol = kDefaultOptimizeTol, int max_iter = 200) {
    if (!(tol > 0.0)) {
        throw InvalidInput("find_optimal_p: tolerance must be positive");
    }
    auto delta = [](double p) { return simplex_density(p).delta; };

    const double lo = kOptimumLeftEdge;
    double hi = 12.0;
    // grow the bracket while delta still rises at its right edge
    for (int k = 0; delta(hi) > delta(hi - 1e-3 * (hi - lo)); ++k) {
        if (k == 20) {
            throw ConvergenceFailure("find_optimal_p: density still increasing at right edge", lo, hi);
        }
        hi *= 2.0;
    }
    return maximize_unimodal(delta, lo, hi, tol, max_iter);
}

}  // namespace hyperball
