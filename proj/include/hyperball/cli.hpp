#pragma once

// Text producers behind the `hyperball` command-line tool. Each command
// returns its complete output so that nothing is written when a later row
// fails. Formatting goes through std::to_chars and is locale independent.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hyperball/density.hpp"
#include "hyperball/errors.hpp"
#include "hyperball/lobachevsky.hpp"
#include "hyperball/optimize.hpp"
#include "hyperball/orthoscheme.hpp"

namespace hyperball::cli {

struct CliConfig {
    int precision = 5;
    double tol = kDefaultOptimizeTol;
    std::optional<std::string> output_path;

    void validate() const {
        if (precision < 1 || precision > 15) {
            throw InvalidInput("precision must be between 1 and 15");
        }
        if (!(tol > 0.0)) {
            throw InvalidInput("tol must be positive");
        }
    }
};

/// Fixed-point with `precision` decimals. Exact binary ties round to even;
/// a value that rounds to zero never carries a minus sign.
inline std::string format_fixed(double value, int precision) {
    char buf[512];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
    if (ec != std::errc{}) {
        throw InvalidInput("format_fixed: value does not fit the output buffer");
    }
    std::string s(buf, end);
    if (!s.empty() && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

/// Shortest decimal that reads back to the same double ("7", "6.5").
inline std::string format_shortest(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw InvalidInput("format_shortest: value does not fit the output buffer");
    }
    return std::string(buf, end);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_plain(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace detail

/// Parses a finite real. Besides plain decimals, multiples of pi are accepted
/// in the forms `pi`, `-pi`, `pi/6`, `2pi/3`, `2*pi/3`.
inline double parse_real(std::string_view text) {
    const std::string_view s = detail::trim(text);
    std::optional<double> v = detail::parse_plain(s);
    if (!v) {
        const auto at = s.find("pi");
        if (at != std::string_view::npos) {
            std::string_view coef = s.substr(0, at);
            std::string_view rest = s.substr(at + 2);
            if (!coef.empty() && coef.back() == '*') {
                coef.remove_suffix(1);
            }
            std::optional<double> c = 1.0;
            if (coef == "-") {
                c = -1.0;
            } else if (!coef.empty() && coef != "+") {
                c = detail::parse_plain(coef);
            }
            std::optional<double> d = 1.0;
            if (!rest.empty()) {
                d = rest.front() == '/' ? detail::parse_plain(rest.substr(1)) : std::nullopt;
            }
            if (c && d && *d != 0.0) {
                v = *c * std::numbers::pi / *d;
            }
        }
    }
    if (!v || !std::isfinite(*v)) {
        throw InvalidInput("not a finite real number: '" + std::string(text) + "'");
    }
    return *v;
}

/// Comma separated list; an empty string is an empty list.
inline std::vector<double> parse_p_list(std::string_view text) {
    std::vector<double> out;
    if (detail::trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// `lo:hi:step` -> lo, lo + step, ... up to hi (inclusive within 1e-9 step).
inline std::vector<double> parse_p_range(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw InvalidInput("--p-range expects lo:hi:step, got '" + std::string(text) + "'");
    }
    const double lo = parse_real(text.substr(0, c1));
    const double hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_real(text.substr(c2 + 1));
    if (!(step > 0.0) || !(lo <= hi)) {
        throw InvalidInput("--p-range needs lo <= hi and step > 0");
    }
    const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
    if (count > 1e7) {
        throw InvalidInput("--p-range would produce more than 1e7 rows");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
        out.push_back(lo + static_cast<double>(i) * step);
    }
    return out;
}

namespace detail {

inline void require_truncatable(double p) {
    if (!std::isfinite(p) || !(p > 6.0)) {
        throw InvalidInput("p = " + format_shortest(p) + " is invalid: p must be a finite value > 6");
    }
}

}  // namespace detail

inline constexpr std::string_view kTableHeader = "p,h,vol_orthoscheme,vol_hyperball_piece,density";

inline std::string cmd_table(const std::vector<double>& p_list, const CliConfig& config) {
    config.validate();
    for (double p : p_list) {
        detail::require_truncatable(p);
    }
    const int prec = config.precision;
    std::string out(kTableHeader);
    out += '\n';
    for (double p : p_list) {
        const DensityRow row = simplex_density(p);
        out += format_shortest(p);
        for (double v : {row.h, row.vol_orthoscheme, row.vol_piece, row.delta}) {
            out += ',';
            out += format_fixed(v, prec);
        }
        out += '\n';
    }
    return out;
}

/// `samples` equally spaced p in [from, to], both ends included.
inline std::vector<double> curve_grid(double from, double to, int samples) {
    if (!std::isfinite(from) || !std::isfinite(to) || !(from > 6.0) || !(from < to)) {
        throw InvalidInput("curve range must satisfy 6 < from < to");
    }
    if (samples < 2) {
        throw InvalidInput("curve needs at least 2 samples");
    }
    std::vector<double> grid(static_cast<std::size_t>(samples));
    const double step = (to - from) / static_cast<double>(samples - 1);
    for (int i = 0; i < samples; ++i) {
        grid[static_cast<std::size_t>(i)] = from + step * static_cast<double>(i);
    }
    grid.back() = to;
    return grid;
}

inline std::string cmd_curve(double from, double to, int samples, const CliConfig& config) {
    config.validate();
    const std::vector<double> grid = curve_grid(from, to, samples);
    std::string out = "p,density\n";
    for (double p : grid) {
        out += format_shortest(p);
        out += ',';
        out += format_fixed(simplex_density(p).delta, config.precision);
        out += '\n';
    }
    return out;
}

inline std::string cmd_optimize(const CliConfig& config) {
    config.validate();
    const OptimizationResult r = find_optimal_p(config.tol);
    return "p_opt=" + format_fixed(r.p_opt, config.precision) +
           " delta_opt=" + format_fixed(r.delta_opt, config.precision) +
           " iterations=" + std::to_string(r.iterations) + "\n";
}

inline std::string cmd_volume(double p, const CliConfig& config) {
    config.validate();
    detail::require_truncatable(p);
    const TruncatedTetraGeometry g = tetra_geometry(p);
    const DensityRow row = simplex_density(p);
    const int prec = config.precision;
    std::string out;
    auto line = [&](std::string_view key, double v) {
        out += key;
        out += '=';
        out += format_fixed(v, prec);
        out += '\n';
    };
    out += "p=" + format_shortest(p) + "\n";
    line("h", g.h);
    line("vol_orthoscheme", g.vol_orthoscheme);
    line("vol_truncated_tetrahedron", g.vol_tetra);
    line("truncation_triangle_area", g.tri_area);
    line("triangle_face_area", g.triangle_face_area);
    line("hexagon_face_area", g.hexagon_area);
    line("surface_area", g.surface_area);
    line("omega", g.omega);
    line("vol_hyperball_piece", row.vol_piece);
    line("density", row.delta);
    return out;
}

inline std::string cmd_lob(double x, const CliConfig& config) {
    config.validate();
    if (!std::isfinite(x)) {
        throw InvalidInput("lob: argument must be finite");
    }
    return format_fixed(lobachevsky(x), config.precision) + "\n";
}

}  // namespace hyperball::cli
