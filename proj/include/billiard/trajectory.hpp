#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "billiard/grid.hpp"

// Two independent constructions of the corner-to-corner billiard path.
//
// The asteroid model runs the straight line n -> (n, n) on the wrap-around
// 2p x 2q rectangle (a torus) and folds it onto the p x q table; folding
// turns wrap-around motion into reflection. The reflective walk simulates
// the bouncing ball directly. Both construct the same path.

namespace billiard {

struct AsteroidPoint {
    std::int64_t x = 0;  // residue in Z_{2p}
    std::int64_t y = 0;  // residue in Z_{2q}

    friend auto operator<=>(const AsteroidPoint&, const AsteroidPoint&) = default;
};

// One slope +-1 step of the path, stored as an unordered endpoint pair in
// canonical (lexicographic) order.
struct DiagonalSegment {
    GridPoint a;
    GridPoint b;

    static DiagonalSegment between(GridPoint u, GridPoint v) {
        if (v < u) std::swap(u, v);
        return DiagonalSegment{u, v};
    }

    friend auto operator<=>(const DiagonalSegment&, const DiagonalSegment&) = default;
};

struct Trajectory {
    NormalizedGrid grid;
    std::vector<GridPoint> visited;          // pq+1 points, corner to corner
    std::vector<DiagonalSegment> segments;   // sorted, one entry per unit diagonal

    bool has_segment(const DiagonalSegment& s) const {
        return std::binary_search(segments.begin(), segments.end(), s);
    }

    const GridPoint& end_corner() const { return visited.back(); }
};

inline AsteroidPoint asteroid_point(std::int64_t n, const NormalizedGrid& grid) {
    const std::int64_t tp = 2 * grid.p;
    const std::int64_t tq = 2 * grid.q;
    return AsteroidPoint{((n % tp) + tp) % tp, ((n % tq) + tq) % tq};
}

// The three folding cases collapse to one rule per coordinate: values in
// (p, 2p) reflect to 2p - x, likewise for y.
inline GridPoint fold(const AsteroidPoint& pt, const NormalizedGrid& grid) {
    const std::int64_t x = pt.x <= grid.p ? pt.x : 2 * grid.p - pt.x;
    const std::int64_t y = pt.y <= grid.q ? pt.y : 2 * grid.q - pt.y;
    return GridPoint{x, y};
}

namespace detail {

inline Trajectory make_trajectory(const NormalizedGrid& grid, std::vector<GridPoint> visited) {
    Trajectory traj{grid, std::move(visited), {}};
    traj.segments.reserve(traj.visited.size() - 1);
    for (std::size_t k = 0; k + 1 < traj.visited.size(); ++k)
        traj.segments.push_back(DiagonalSegment::between(traj.visited[k], traj.visited[k + 1]));
    std::sort(traj.segments.begin(), traj.segments.end());
    if (std::adjacent_find(traj.segments.begin(), traj.segments.end()) != traj.segments.end())
        throw std::logic_error("trajectory retraced a segment");
    return traj;
}

inline void require_coprime(const NormalizedGrid& grid) {
    if (!grid.coprime())
        throw std::invalid_argument("grid " + std::to_string(grid.p) + " x " +
                                    std::to_string(grid.q) + " is not coprime");
}

}  // namespace detail

inline Trajectory billiard_trajectory(const NormalizedGrid& grid) {
    detail::require_coprime(grid);
    const std::int64_t steps = grid.p * grid.q;
    std::vector<GridPoint> visited;
    visited.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t n = 0; n <= steps; ++n)
        visited.push_back(fold(asteroid_point(n, grid), grid));
    return detail::make_trajectory(grid, std::move(visited));
}

inline Trajectory reflective_walk(const NormalizedGrid& grid) {
    detail::require_coprime(grid);
    std::vector<GridPoint> visited;
    visited.reserve(static_cast<std::size_t>(grid.p * grid.q) + 1);

    GridPoint pos{0, 0};
    std::int64_t dx = 1, dy = 1;
    visited.push_back(pos);
    const std::int64_t max_steps = 2 * grid.p * grid.q;
    for (std::int64_t step = 0;; ++step) {
        if (step > max_steps)
            throw std::runtime_error("reflective walk on " + std::to_string(grid.p) + " x " +
                                     std::to_string(grid.q) + " exceeded " +
                                     std::to_string(max_steps) + " steps without hitting a corner");
        if (pos.x + dx < 0 || pos.x + dx > grid.p) dx = -dx;
        if (pos.y + dy < 0 || pos.y + dy > grid.q) dy = -dy;
        pos = GridPoint{pos.x + dx, pos.y + dy};
        visited.push_back(pos);
        if (classify(pos, grid) == PointClass::Corner) break;
    }
    return detail::make_trajectory(grid, std::move(visited));
}

inline std::set<GridPoint> visited_point_set(const Trajectory& traj) {
    return std::set<GridPoint>(traj.visited.begin(), traj.visited.end());
}

}  // namespace billiard
