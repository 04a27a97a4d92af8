#pragma once

#include <string>
#include <vector>

#include "billiard/oracle.hpp"
#include "billiard/trajectory.hpp"

// Deterministic depictions of a trajectory. SVG draws with the origin
// bottom-left, atomic squares green and molecular rectangles blue; ASCII
// uses a doubled (2p+1) x (2q+1) raster so each unit diagonal gets its own
// character cell. Identical inputs give identical bytes: elements are
// emitted in sorted order throughout.

namespace billiard {

enum class RenderFormat { Svg, Ascii };

struct RenderOptions {
    int cell_size = 24;  // SVG pixels per grid unit, >= 4
    bool show_grid = true;
    bool highlight_atomic = false;
    std::vector<TiltedRect> highlight_rects;
    RenderFormat format = RenderFormat::Svg;
};

namespace detail {

inline constexpr const char* kGridColor = "#cccccc";
inline constexpr const char* kPathColor = "#000000";
inline constexpr const char* kAtomicColor = "#2e8b57";
inline constexpr const char* kMolecularColor = "#1e60c8";

inline std::string render_svg(const Trajectory& traj, const RenderOptions& opts) {
    if (opts.cell_size < 4)
        throw std::invalid_argument("SVG cell size must be at least 4 pixels");
    const std::int64_t p = traj.grid.p;
    const std::int64_t q = traj.grid.q;
    const std::int64_t cell = opts.cell_size;
    const std::int64_t margin = cell / 2;
    const std::int64_t width = p * cell + 2 * margin;
    const std::int64_t height = q * cell + 2 * margin;
    // y axis flipped so the origin sits bottom-left as in the figures
    const auto px = [&](std::int64_t x) { return margin + x * cell; };
    const auto py = [&](std::int64_t y) { return margin + (q - y) * cell; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    const auto line = [&](std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2,
                          const char* color, int stroke_width, bool round_cap) {
        out += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
               "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
               "\" stroke=\"" + color + "\" stroke-width=\"" + std::to_string(stroke_width) +
               "\"" + (round_cap ? " stroke-linecap=\"round\"" : "") + "/>\n";
    };
    const auto polygon = [&](const std::array<GridPoint, 4>& corners, const std::string& style) {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < corners.size(); ++i) {
            if (i > 0) out += " ";
            out += std::to_string(px(corners[i].x)) + "," + std::to_string(py(corners[i].y));
        }
        out += "\" " + style + "/>\n";
    };

    if (opts.show_grid) {
        for (std::int64_t x = 0; x <= p; ++x)
            line(px(x), py(0), px(x), py(q), kGridColor, 1, false);
        for (std::int64_t y = 0; y <= q; ++y)
            line(px(0), py(y), px(p), py(y), kGridColor, 1, false);
    }

    if (opts.highlight_atomic) {
        for (const GridPoint& center : unvisited_interior_points(traj)) {
            const TiltedRect unit{GridPoint{center.x, center.y - 1}, 1, 1};
            polygon(unit.corners(), std::string("fill=\"") + kAtomicColor +
                                        "\" fill-opacity=\"0.5\"");
        }
    }
    for (const TiltedRect& rect : opts.highlight_rects) {
        if (!rect.in_bounds(traj.grid))
            throw std::out_of_range("highlighted rectangle leaves the grid");
        polygon(rect.corners(), std::string("fill=\"none\" stroke=\"") + kMolecularColor +
                                    "\" stroke-width=\"2\"");
    }
    for (const DiagonalSegment& s : traj.segments)
        line(px(s.a.x), py(s.a.y), px(s.b.x), py(s.b.y), kPathColor, 2, true);

    out += "</svg>\n";
    return out;
}

inline std::string render_ascii(const Trajectory& traj) {
    const std::int64_t p = traj.grid.p;
    const std::int64_t q = traj.grid.q;
    const std::size_t cols = static_cast<std::size_t>(2 * p + 1);
    std::vector<std::string> raster(static_cast<std::size_t>(2 * q + 1),
                                    std::string(cols, ' '));
    // row 0 is grid row q; doubled coordinate dy renders at row 2q - dy
    const auto at = [&](std::int64_t dx, std::int64_t dy) -> char& {
        return raster[static_cast<std::size_t>(2 * q - dy)][static_cast<std::size_t>(dx)];
    };

    const std::set<GridPoint> seen = visited_point_set(traj);
    for (std::int64_t x = 0; x <= p; ++x)
        for (std::int64_t y = 0; y <= q; ++y) {
            const GridPoint pt{x, y};
            if (seen.contains(pt))
                at(2 * x, 2 * y) = '+';
            else
                at(2 * x, 2 * y) = classify(pt, traj.grid) == PointClass::Interior ? 'o' : '.';
        }
    for (const DiagonalSegment& s : traj.segments)
        at(s.a.x + s.b.x, s.a.y + s.b.y) = s.a.y < s.b.y ? '/' : '\\';

    std::string out;
    for (std::string& row : raster) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace detail

inline std::string render(const Trajectory& traj, const RenderOptions& opts) {
    return opts.format == RenderFormat::Svg ? detail::render_svg(traj, opts)
                                            : detail::render_ascii(traj);
}

}  // namespace billiard
