#pragma once

#include <cmath>
#include <numbers>

#include "hyperball/errors.hpp"
#include "hyperball/orthoscheme.hpp"

namespace hyperball {

/// Bolyai: volume of the hyperball piece of height h over a base polygon of
/// the given area, bounded by the prism orthogonal to the base plane (k = 1).
inline double hyperball_piece_volume(double area, double h) {
    if (!(area >= 0.0) || !(h >= 0.0)) {
        throw DomainError("hyperball_piece_volume: area and height must be non-negative");
    }
    return 0.25 * area * (std::sinh(2.0 * h) + 2.0 * h);
}

/// One row of the density table. All quantities are per orthoscheme; the
/// truncated tetrahedron holds 24 congruent copies, so delta is unchanged.
struct DensityRow {
    double p;
    double h;
    double vol_orthoscheme;
    double vol_piece;
    double delta;

    [[nodiscard]] double vol_tetra() const { return 24.0 * vol_orthoscheme; }
    [[nodiscard]] double vol_pieces_tetra() const { return 24.0 * vol_piece; }
};

/// Local density of congruent hyperballs of maximal height h(p) in the
/// regular truncated tetrahedron with dihedral parameter p.
inline DensityRow simplex_density(double p) {
    if (!(p > 6.0)) {
        throw DomainError("simplex_density: p must exceed 6");
    }
    DensityRow row{};
    row.p = p;
    row.h = hyperball_height(p);
    row.vol_orthoscheme = orthoscheme_volume(OrthoschemeAngles::for_p(p));
    row.vol_piece = hyperball_piece_volume(truncation_triangle(p).area, row.h);
    row.delta = row.vol_piece / row.vol_orthoscheme;
    return row;
}

/// Density of the regular hypercycle packing in a right-angled hexagon whose
/// alternate sides carry hypercycles of distance h:
/// 6 sinh(h) asinh(1 / (2 sinh h)) / pi, increasing towards 3/pi.
inline double vermes_hexagon_density(double h) {
    if (!(h > 0.0)) {
        throw DomainError("vermes_hexagon_density: h must be positive");
    }
    const double s = std::sinh(h);
    return 6.0 * s * std::asinh(1.0 / (2.0 * s)) / std::numbers::pi;
}

}  // namespace hyperball
