#pragma once

// Metric kernel of the projective model of H^3 in Lorentz space E^{1,3}.
//
// Points and plane forms are homogeneous 4-vectors under the bilinear form
// of signature (1,3). Everything downstream is expressed through Gram
// entries; no embedding coordinates are built.

#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>

#include "hyperball/errors.hpp"

namespace hyperball {

/// Homogeneous vector (x0, x1, x2, x3); meaningful up to a nonzero factor.
struct LorentzVector {
    std::array<double, 4> x{};

    constexpr LorentzVector() = default;
    constexpr LorentzVector(double x0, double x1, double x2, double x3)
        : x{x0, x1, x2, x3} {}

    constexpr double operator[](std::size_t i) const { return x[i]; }
    constexpr double& operator[](std::size_t i) { return x[i]; }

    [[nodiscard]] constexpr bool is_zero() const {
        return x[0] == 0.0 && x[1] == 0.0 && x[2] == 0.0 && x[3] == 0.0;
    }

    /// Euclidean squared norm of the components (not the Lorentz form).
    [[nodiscard]] constexpr double euclidean_norm2() const {
        return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    }
};

enum class PointClass { Proper, Ideal, Outer };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Proper: return "proper";
        case PointClass::Ideal: return "ideal";
        case PointClass::Outer: return "outer";
    }
    return "?";
}

inline constexpr double kDefaultIdealTol = 1e-10;
inline constexpr double kDefaultSingularDet = 1e-12;

/// <x, y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3
constexpr double bilinear_form(const LorentzVector& x, const LorentzVector& y) {
    return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

/// Proper (<x,x> < 0), ideal (on the absolute) or outer point.
/// |<x,x>| <= tol * |x|^2 counts as ideal, so the result is scale invariant.
inline PointClass classify_point(const LorentzVector& x, double tol = kDefaultIdealTol) {
    if (x.is_zero()) {
        throw InvalidInput("classify_point: zero vector does not represent a point");
    }
    if (!(tol >= 0.0)) {
        throw InvalidInput("classify_point: tolerance must be non-negative");
    }
    const double q = bilinear_form(x, x);
    if (std::abs(q) <= tol * x.euclidean_norm2()) {
        return PointClass::Ideal;
    }
    return q < 0.0 ? PointClass::Proper : PointClass::Outer;
}

/// Symmetric 4x4 matrix holding only its upper triangle, so
/// (i, j) and (j, i) always alias the same storage.
class SymMatrix4 {
public:
    constexpr SymMatrix4() = default;

    static constexpr SymMatrix4 identity() {
        SymMatrix4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            m.set(i, i, 1.0);
        }
        return m;
    }

    static constexpr SymMatrix4 diagonal(double d0, double d1, double d2, double d3) {
        SymMatrix4 m;
        m.set(0, 0, d0);
        m.set(1, 1, d1);
        m.set(2, 2, d2);
        m.set(3, 3, d3);
        return m;
    }

    constexpr double operator()(std::size_t i, std::size_t j) const { return v_[slot(i, j)]; }
    constexpr void set(std::size_t i, std::size_t j, double value) { v_[slot(i, j)] = value; }

    friend constexpr bool operator==(const SymMatrix4&, const SymMatrix4&) = default;

private:
    static constexpr std::size_t slot(std::size_t i, std::size_t j) {
        if (i > j) {
            const std::size_t t = i;
            i = j;
            j = t;
        }
        // row-major upper triangle: row i starts at 4i - i(i-1)/2
        return 4 * i - i * (i - 1) / 2 + (j - i);
    }

    std::array<double, 10> v_{};
};

namespace detail {

// 2x2 minors of the top two and bottom two rows; shared by det and adjugate.
struct Minors4 {
    double s0, s1, s2, s3, s4, s5;
    double c0, c1, c2, c3, c4, c5;
    double det;
};

inline Minors4 minors(const SymMatrix4& m) {
    Minors4 r{};
    r.s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
    r.s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
    r.s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
    r.s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
    r.s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
    r.s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);

    r.c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
    r.c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
    r.c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
    r.c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
    r.c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
    r.c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);

    r.det = r.s0 * r.c5 - r.s1 * r.c4 + r.s2 * r.c3 + r.s3 * r.c2 - r.s4 * r.c1 + r.s5 * r.c0;
    return r;
}

}  // namespace detail

inline double determinant(const SymMatrix4& m) { return detail::minors(m).det; }

/// Inverse through the adjugate. The two cofactor expressions for each
/// off-diagonal pair are averaged, which keeps the result exactly symmetric.
inline SymMatrix4 invert_sym4(const SymMatrix4& m, double singular_det = kDefaultSingularDet) {
    const detail::Minors4 k = detail::minors(m);
    if (!(std::abs(k.det) > singular_det)) {
        std::ostringstream msg;
        msg << "invert_sym4: matrix is singular (det = " << k.det << ")";
        throw SingularMatrix(msg.str(), k.det);
    }

    std::array<std::array<double, 4>, 4> b{};
    b[0][0] = m(1, 1) * k.c5 - m(1, 2) * k.c4 + m(1, 3) * k.c3;
    b[0][1] = -m(0, 1) * k.c5 + m(0, 2) * k.c4 - m(0, 3) * k.c3;
    b[0][2] = m(3, 1) * k.s5 - m(3, 2) * k.s4 + m(3, 3) * k.s3;
    b[0][3] = -m(2, 1) * k.s5 + m(2, 2) * k.s4 - m(2, 3) * k.s3;

    b[1][0] = -m(1, 0) * k.c5 + m(1, 2) * k.c2 - m(1, 3) * k.c1;
    b[1][1] = m(0, 0) * k.c5 - m(0, 2) * k.c2 + m(0, 3) * k.c1;
    b[1][2] = -m(3, 0) * k.s5 + m(3, 2) * k.s2 - m(3, 3) * k.s1;
    b[1][3] = m(2, 0) * k.s5 - m(2, 2) * k.s2 + m(2, 3) * k.s1;

    b[2][0] = m(1, 0) * k.c4 - m(1, 1) * k.c2 + m(1, 3) * k.c0;
    b[2][1] = -m(0, 0) * k.c4 + m(0, 1) * k.c2 - m(0, 3) * k.c0;
    b[2][2] = m(3, 0) * k.s4 - m(3, 1) * k.s2 + m(3, 3) * k.s0;
    b[2][3] = -m(2, 0) * k.s4 + m(2, 1) * k.s2 - m(2, 3) * k.s0;

    b[3][0] = -m(1, 0) * k.c3 + m(1, 1) * k.c1 - m(1, 2) * k.c0;
    b[3][1] = m(0, 0) * k.c3 - m(0, 1) * k.c1 + m(0, 2) * k.c0;
    b[3][2] = -m(3, 0) * k.s3 + m(3, 1) * k.s1 - m(3, 2) * k.s0;
    b[3][3] = m(2, 0) * k.s3 - m(2, 1) * k.s1 + m(2, 2) * k.s0;

    const double inv_det = 1.0 / k.det;
    SymMatrix4 h;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            h.set(i, j, 0.5 * (b[i][j] + b[j][i]) * inv_det);
        }
    }
    return h;
}

/// Hyperbolic distance between two proper points given only their Gram
/// entries: cosh d = |<x,y>| / sqrt(<x,x><y,y>), curvature unit k = 1.
/// The absolute value makes the result independent of the sign of either
/// homogeneous representative; for same-sheet representatives it equals
/// -<x,y> / sqrt(<x,x><y,y>).
inline double gram_distance(double g_xx, double g_yy, double g_xy) {
    if (!(g_xx < 0.0) || !(g_yy < 0.0)) {
        throw DomainError("gram_distance: both points must be proper (<x,x> < 0)");
    }
    double c = std::abs(g_xy) / std::sqrt(g_xx * g_yy);
    if (!(c >= 1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "gram_distance: cosh argument " << c << " is below 1";
        throw DomainError(msg.str());
    }
    if (c < 1.0) {
        c = 1.0;
    }
    return std::acosh(c);
}

/// Gram data of q_j ~ a_j H(u,u) - a_u H(j,u), the projection of vertex j
/// onto the polar plane of the outer vertex u.
struct PolarProjection {
    double g_qq;  ///< <q_j, q_j>
    double g_qa;  ///< <q_j, a_j>
    double g_qu;  ///< <q_j, a_u>; vanishes because q_j lies on pol(a_u)
};

namespace detail {

inline void check_polar_args(const SymMatrix4& h, std::size_t j, std::size_t u) {
    if (j > 3 || u > 3) {
        throw InvalidInput("project_to_polar: vertex index out of range");
    }
    if (j == u) {
        throw InvalidInput("project_to_polar: cannot project the pole onto its own polar");
    }
    if (!(h(u, u) > 0.0)) {
        std::ostringstream msg;
        msg << "project_to_polar: vertex " << u << " is not outer (H(u,u) = " << h(u, u) << ")";
        throw NotTruncatable(msg.str());
    }
}

}  // namespace detail

inline PolarProjection project_to_polar(const SymMatrix4& h, std::size_t j, std::size_t u) {
    detail::check_polar_args(h, j, u);
    const double huu = h(u, u);
    const double hjj = h(j, j);
    const double hju = h(j, u);
    return PolarProjection{
        huu * (hjj * huu - hju * hju),
        huu * hjj - hju * hju,
        huu * hju - hju * huu,
    };
}

/// <q_j, q_k> for two vertices projected onto the polar plane of u.
inline double polar_gram(const SymMatrix4& h, std::size_t j, std::size_t k, std::size_t u) {
    detail::check_polar_args(h, j, u);
    detail::check_polar_args(h, k, u);
    return h(u, u) * (h(u, u) * h(j, k) - h(j, u) * h(k, u));
}

}  // namespace hyperball
