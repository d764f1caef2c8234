#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration. Nodes never touch the
// interval ends, so integrable endpoint singularities such as log t are
// handled by repeated bisection of the worst segment.

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "hyperball/errors.hpp"

namespace hyperball {

struct QuadratureResult {
    double value;
    double error;   // sum of |K15 - G7| over the final partition
    int segments;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod15(const F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(mid - dx) + f(mid + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return Segment{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over the partition given by `breakpoints` (sorted, at least
/// two entries) until the summed error estimate drops below abs_tol.
template <class F>
QuadratureResult integrate_adaptive(const F& f, const std::vector<double>& breakpoints,
                                    double abs_tol, int max_segments = 20000) {
    if (breakpoints.size() < 2) {
        throw InvalidInput("integrate_adaptive: need at least two breakpoints");
    }
    if (!(abs_tol > 0.0)) {
        throw InvalidInput("integrate_adaptive: tolerance must be positive");
    }
    std::priority_queue<detail::Segment> work;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] > breakpoints[i]) {
            const detail::Segment s = detail::gauss_kronrod15(f, breakpoints[i], breakpoints[i + 1]);
            total_error += s.error;
            work.push(s);
        }
    }

    while (total_error > abs_tol) {
        if (static_cast<int>(work.size()) >= max_segments) {
            throw ConvergenceFailure("integrate_adaptive: segment budget exhausted",
                                     breakpoints.front(), breakpoints.back());
        }
        const detail::Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceFailure("integrate_adaptive: segment cannot be bisected further",
                                     worst.a, worst.b);
        }
        const detail::Segment left = detail::gauss_kronrod15(f, worst.a, mid);
        const detail::Segment right = detail::gauss_kronrod15(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }

    QuadratureResult result{0.0, 0.0, static_cast<int>(work.size())};
    while (!work.empty()) {
        result.value += work.top().value;
        result.error += work.top().error;
        work.pop();
    }
    return result;
}

}  // namespace hyperball
