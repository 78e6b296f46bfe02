#pragma once

#include "lmis/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace lmis {

namespace detail {

inline std::string svg_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace detail

/// Draws every shape as a two-segment path (horizontal tip, corner,
/// vertical tip), unselected in gray first and selected in red on top,
/// with the y axis flipped into screen coordinates.
inline void render_svg(std::ostream& out, const std::vector<LShape>& shapes,
                       const std::vector<std::size_t>& selected) {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    bool first = true;
    for (const LShape& l : shapes) {
        const double xs[2] = {to_double(l.corner_x), to_double(l.htip_x)};
        const double ys[2] = {to_double(l.corner_y), to_double(l.vtip_y)};
        if (first) {
            min_x = max_x = xs[0];
            min_y = max_y = ys[0];
            first = false;
        }
        for (const double x : xs) {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
        }
        for (const double y : ys) {
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double width = 880.0;
    const double scale = width / span_x;
    const double height = span_y * scale;
    const double pad = 20.0;

    const auto X = [&](const Rational& x) { return (to_double(x) - min_x) * scale + pad; };
    const auto Y = [&](const Rational& y) { return (max_y - to_double(y)) * scale + pad; };

    std::vector<bool> is_selected(shapes.size(), false);
    for (std::size_t i : selected) {
        if (i < shapes.size()) {
            is_selected[i] = true;
        }
    }

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(width + 2 * pad)
        << "\" height=\"" << detail::svg_num(height + 2 * pad) << "\" viewBox=\"0 0 "
        << detail::svg_num(width + 2 * pad) << ' ' << detail::svg_num(height + 2 * pad) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const auto emit = [&](const LShape& l, const char* color, double stroke) {
        out << "  <path d=\"M " << detail::svg_num(X(l.htip_x)) << ' '
            << detail::svg_num(Y(l.corner_y)) << " L " << detail::svg_num(X(l.corner_x)) << ' '
            << detail::svg_num(Y(l.corner_y)) << " L " << detail::svg_num(X(l.corner_x)) << ' '
            << detail::svg_num(Y(l.vtip_y)) << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"" << detail::svg_num(stroke)
            << "\" stroke-linecap=\"square\"/>\n";
    };
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (!is_selected[i]) {
            emit(shapes[i], "#8a8a8a", 1.2);
        }
    }
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (is_selected[i]) {
            emit(shapes[i], "#d62728", 2.6);
        }
    }
    out << "</svg>\n";
}

}  // namespace lmis
