#pragma once

// Simple frustum orthoscheme of the [3,3,p] family and the regular truncated
// tetrahedron assembled from 24 copies of it.
//
// Vertex indexing of the Gram matrix H = C^{-1}: index 3 is the outer
// principal vertex B1 (truncated by its polar plane), index 2 the proper
// vertex P2 whose projection Q2 realises the hyperball height.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperball/errors.hpp"
#include "hyperball/lobachevsky.hpp"
#include "hyperball/lorentz.hpp"

namespace hyperball {

inline constexpr std::size_t kOuterVertex = 3;
inline constexpr std::size_t kHeightVertex = 2;

/// Essential angles of a complete orthoscheme, radians in [0, pi/2].
struct OrthoschemeAngles {
    double alpha01;
    double alpha12;
    double alpha23;

    /// (pi/p, pi/3, pi/3); p = infinity gives alpha01 = 0.
    static OrthoschemeAngles for_p(double p) {
        using std::numbers::pi;
        if (!(p > 2.0)) {
            throw DomainError("OrthoschemeAngles: p must exceed 2");
        }
        return OrthoschemeAngles{pi / p, pi / 3.0, pi / 3.0};
    }
};

namespace detail {

inline void check_angles(const OrthoschemeAngles& a) {
    const double half_pi = 0.5 * std::numbers::pi;
    for (double v : {a.alpha01, a.alpha12, a.alpha23}) {
        if (!(v >= 0.0 && v <= half_pi)) {
            throw DomainError("orthoscheme: essential angles must lie in [0, pi/2]");
        }
    }
}

inline void check_truncatable(double p, const char* where) {
    if (!(p > 6.0)) {
        std::ostringstream msg;
        msg << where << ": p = " << p << " has no outer vertex (need p > 6)";
        throw NotTruncatable(msg.str());
    }
}

}  // namespace detail

/// Coxeter-Schlaefli matrix of [3,3,p]: unit diagonal, -cos(pi/p) at (0,1),
/// -1/2 at (1,2) and (2,3).
inline SymMatrix4 coxeter_matrix(double p) {
    if (!(p > 2.0)) {
        throw DomainError("coxeter_matrix: p must exceed 2");
    }
    SymMatrix4 c = SymMatrix4::identity();
    c.set(0, 1, -std::cos(std::numbers::pi / p));
    c.set(1, 2, -0.5);
    c.set(2, 3, -0.5);
    return c;
}

/// Vertex Gram matrix of the orthoscheme.
inline SymMatrix4 vertex_gram(double p) { return invert_sym4(coxeter_matrix(p)); }

/// tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23)
inline double kellerhals_theta(const OrthoschemeAngles& a) {
    detail::check_angles(a);
    const double c12 = std::cos(a.alpha12);
    const double s01 = std::sin(a.alpha01);
    const double s23 = std::sin(a.alpha23);
    const double radicand = c12 * c12 - s01 * s01 * s23 * s23;
    if (radicand < 0.0) {
        std::ostringstream msg;
        msg << "kellerhals_theta: cos^2(alpha12) < sin^2(alpha01) sin^2(alpha23) (radicand = "
            << radicand << ")";
        throw DomainError(msg.str());
    }
    const double denom = std::cos(a.alpha01) * std::cos(a.alpha23);
    if (!(denom > 0.0)) {
        throw DomainError("kellerhals_theta: need cos(alpha01) > 0 and cos(alpha23) > 0");
    }
    return std::atan(std::sqrt(radicand) / denom);
}

/// Kellerhals' volume of a complete (at most simply truncated) orthoscheme.
inline double orthoscheme_volume(const OrthoschemeAngles& a) {
    using std::numbers::pi;
    const double t = kellerhals_theta(a);
    const double sum = lobachevsky(a.alpha01 + t) - lobachevsky(a.alpha01 - t) +
                       lobachevsky(0.5 * pi + a.alpha12 - t) +
                       lobachevsky(0.5 * pi - a.alpha12 - t) + lobachevsky(a.alpha23 + t) -
                       lobachevsky(a.alpha23 - t) + 2.0 * lobachevsky(0.5 * pi - t);
    return 0.25 * sum;
}

/// Half the distance between adjacent base planes of the regular truncated
/// tetrahedron: cosh h = sqrt((H22 H33 - H23^2) / (H22 H33)).
inline double hyperball_height(double p) {
    detail::check_truncatable(p, "hyperball_height");
    const SymMatrix4 h = vertex_gram(p);
    const double h22 = h(kHeightVertex, kHeightVertex);
    const double h33 = h(kOuterVertex, kOuterVertex);
    const double h23 = h(kHeightVertex, kOuterVertex);
    if (!(h33 > 0.0)) {
        throw NotTruncatable("hyperball_height: vertex B1 is not outer");
    }
    const double c = std::sqrt((h22 * h33 - h23 * h23) / (h22 * h33));
    return std::acosh(c < 1.0 ? 1.0 : c);
}

/// Triangle Q0 Q1 Q2 cut from the orthoscheme by the polar plane of B1.
struct TruncationTriangle {
    double area;
    double angle_q0;
    double angle_q1;
    double angle_q2;
    double side_q1q2;
    double side_q0q2;
    double side_q0q1;
};

inline TruncationTriangle truncation_triangle(double p) {
    detail::check_truncatable(p, "truncation_triangle");
    const SymMatrix4 h = vertex_gram(p);

    auto side = [&](std::size_t j, std::size_t k) {
        const double len = gram_distance(polar_gram(h, j, j, kOuterVertex),
                                         polar_gram(h, k, k, kOuterVertex),
                                         polar_gram(h, j, k, kOuterVertex));
        if (len < 1e-12) {
            throw DegenerateTriangle("truncation_triangle: side shorter than 1e-12");
        }
        return len;
    };
    // angle between sides `s1` and `s2`, opposite `opp`
    auto angle = [](double s1, double s2, double opp) {
        double c = (std::cosh(s1) * std::cosh(s2) - std::cosh(opp)) / (std::sinh(s1) * std::sinh(s2));
        c = std::clamp(c, -1.0, 1.0);
        return std::acos(c);
    };

    TruncationTriangle t{};
    t.side_q1q2 = side(1, 2);
    t.side_q0q2 = side(0, 2);
    t.side_q0q1 = side(0, 1);
    t.angle_q0 = angle(t.side_q0q1, t.side_q0q2, t.side_q1q2);
    t.angle_q1 = angle(t.side_q0q1, t.side_q1q2, t.side_q0q2);
    t.angle_q2 = angle(t.side_q0q2, t.side_q1q2, t.side_q0q1);
    t.area = std::numbers::pi - (t.angle_q0 + t.angle_q1 + t.angle_q2);
    return t;
}

/// Per-p report on the regular truncated tetrahedron S^r(p).
struct TruncatedTetraGeometry {
    double p;
    double h;
    double vol_orthoscheme;
    double vol_tetra;            ///< 24 * vol_orthoscheme
    double tri_area;             ///< Q0 Q1 Q2, one sixth of a truncation face
    double triangle_face_area;   ///< 6 * tri_area
    double hexagon_area;         ///< right-angled hexagon, always pi
    double surface_area;
    double omega;                ///< sum of the six hexagon-hexagon dihedral angles
};

inline TruncatedTetraGeometry tetra_geometry(double p) {
    using std::numbers::pi;
    detail::check_truncatable(p, "tetra_geometry");

    TruncatedTetraGeometry g{};
    g.p = p;
    g.h = hyperball_height(p);
    g.vol_orthoscheme = orthoscheme_volume(OrthoschemeAngles::for_p(p));
    g.vol_tetra = 24.0 * g.vol_orthoscheme;
    g.tri_area = truncation_triangle(p).area;
    g.triangle_face_area = 6.0 * g.tri_area;
    g.hexagon_area = 4.0 * pi - 6.0 * (0.5 * pi);
    g.surface_area = 4.0 * g.hexagon_area + 4.0 * g.triangle_face_area;
    // each solid dihedral angle along a hexagon-hexagon edge is 2 * alpha01
    g.omega = 6.0 * (2.0 * (pi / p));

    const double mismatch = g.surface_area - (8.0 * pi - 2.0 * g.omega);
    if (!(std::abs(mismatch) <= 1e-9)) {
        std::ostringstream msg;
        msg << "tetra_geometry: surface area differs from 8*pi - 2*Omega by " << mismatch;
        throw NumericalFailure(msg.str());
    }
    return g;
}

}  // namespace hyperball
