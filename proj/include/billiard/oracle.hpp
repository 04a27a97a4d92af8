#pragma once

#include <array>
#include <set>
#include <vector>

#include "billiard/counting.hpp"
#include "billiard/trajectory.hpp"

// Brute-force ground truth: rectangles are counted by checking, segment by
// segment, that their border lies on the trajectory. The enumeration shares
// no reasoning with the closed forms it is compared against.

namespace billiard {

// Tilted rectangle identified by its lowest corner; sides run m steps along
// slope -1 and n steps along slope +1.
struct TiltedRect {
    GridPoint bottom;
    std::int64_t m = 1;
    std::int64_t n = 1;

    std::array<GridPoint, 4> corners() const {
        return {bottom,
                GridPoint{bottom.x + n, bottom.y + n},
                GridPoint{bottom.x + n - m, bottom.y + n + m},
                GridPoint{bottom.x - m, bottom.y + m}};
    }

    bool in_bounds(const NormalizedGrid& grid) const {
        for (const GridPoint& c : corners())
            if (!in_grid(c, grid)) return false;
        return true;
    }
};

namespace detail {

// Each unit diagonal lives in one grid cell and has slope +1 or -1; a flat
// boolean table per (cell, slope) gives exact O(1) membership.
class SegmentIndex {
  public:
    explicit SegmentIndex(const Trajectory& traj)
        : p_(traj.grid.p), rising_(static_cast<std::size_t>(traj.grid.p * traj.grid.q), false),
          falling_(static_cast<std::size_t>(traj.grid.p * traj.grid.q), false) {
        for (const DiagonalSegment& s : traj.segments) {
            // canonical order puts a left of b, so the slope sign is a.y vs b.y
            const std::int64_t cx = s.a.x;
            const std::int64_t cy = std::min(s.a.y, s.b.y);
            (s.a.y < s.b.y ? rising_ : falling_)[cell(cx, cy)] = true;
        }
    }

    bool rising(std::int64_t cx, std::int64_t cy) const { return rising_[cell(cx, cy)]; }
    bool falling(std::int64_t cx, std::int64_t cy) const { return falling_[cell(cx, cy)]; }

  private:
    std::size_t cell(std::int64_t cx, std::int64_t cy) const {
        return static_cast<std::size_t>(cy * p_ + cx);
    }

    std::int64_t p_;
    std::vector<bool> rising_;   // (cx,cy)-(cx+1,cy+1)
    std::vector<bool> falling_;  // (cx,cy+1)-(cx+1,cy)
};

inline bool border_on_index(const TiltedRect& rect, const SegmentIndex& index) {
    const std::int64_t bx = rect.bottom.x;
    const std::int64_t by = rect.bottom.y;
    for (std::int64_t i = 0; i < rect.n; ++i) {
        if (!index.rising(bx + i, by + i)) return false;                          // bottom-right side
        if (!index.rising(bx - rect.m + i, by + rect.m + i)) return false;        // top-left side
    }
    for (std::int64_t i = 0; i < rect.m; ++i) {
        if (!index.falling(bx - 1 - i, by + i)) return false;                     // bottom-left side
        if (!index.falling(bx + rect.n - 1 - i, by + rect.n + i)) return false;   // top-right side
    }
    return true;
}

inline Count count_rects(const RectClass& cls, const NormalizedGrid& grid,
                         const SegmentIndex& index) {
    Count found = 0;
    for (std::int64_t by = 0; by + cls.m + cls.n <= grid.q; ++by)
        for (std::int64_t bx = cls.m; bx + cls.n <= grid.p; ++bx)
            if (border_on_index(TiltedRect{GridPoint{bx, by}, cls.m, cls.n}, index)) ++found;
    return found;
}

}  // namespace detail

inline bool rect_on_trajectory(const TiltedRect& rect, const Trajectory& traj) {
    if (!rect.in_bounds(traj.grid))
        throw std::out_of_range("tilted rectangle corners leave the grid");
    std::array<GridPoint, 4> ring = rect.corners();
    for (std::size_t side = 0; side < 4; ++side) {
        const GridPoint from = ring[side];
        const GridPoint to = ring[(side + 1) % 4];
        const std::int64_t len = side % 2 == 0 ? rect.n : rect.m;
        const std::int64_t sx = to.x > from.x ? 1 : -1;
        const std::int64_t sy = to.y > from.y ? 1 : -1;
        for (std::int64_t i = 0; i < len; ++i) {
            const GridPoint u{from.x + sx * i, from.y + sy * i};
            const GridPoint v{u.x + sx, u.y + sy};
            if (!traj.has_segment(DiagonalSegment::between(u, v))) return false;
        }
    }
    return true;
}

inline Count enumerate_rects(const RectClass& cls, const Trajectory& traj) {
    return detail::count_rects(cls, traj.grid, detail::SegmentIndex(traj));
}

inline std::set<GridPoint> unvisited_interior_points(const Trajectory& traj) {
    const std::set<GridPoint> seen = visited_point_set(traj);
    std::set<GridPoint> missed;
    for (std::int64_t x = 1; x < traj.grid.p; ++x)
        for (std::int64_t y = 1; y < traj.grid.q; ++y)
            if (!seen.contains(GridPoint{x, y})) missed.insert(GridPoint{x, y});
    return missed;
}

inline CountReport oracle_report(const NormalizedGrid& grid) {
    const Trajectory traj = billiard_trajectory(grid);
    const detail::SegmentIndex index(traj);

    CountReport report;
    report.grid = grid;
    report.atomic_formula = atomic_count(grid);
    report.atomic_oracle = detail::count_rects(RectClass{1, 1}, grid, index);
    report.atomic_centers = static_cast<Count>(unvisited_interior_points(traj).size());

    const std::int64_t limit = std::min(grid.p, grid.q);
    report.molecular_oracle = 0;
    for (std::int64_t m = 1; m < limit; ++m) {
        for (std::int64_t n = 1; m + n <= limit; ++n) {
            const RectClass cls{m, n};
            ClassReport entry{cls, class_count(cls, grid),
                              detail::count_rects(cls, grid, index)};
            report.molecular_oracle += entry.oracle;
            report.per_class.push_back(entry);
        }
    }
    report.molecular_total_formula = total_molecular(grid);
    report.molecular_total_summed = total_by_summation(grid);

    bool classes_match = true;
    for (const ClassReport& entry : report.per_class)
        classes_match = classes_match && entry.formula == entry.oracle;
    report.all_match = classes_match &&
                       report.atomic_formula == report.atomic_oracle &&
                       report.atomic_formula == report.atomic_centers &&
                       report.molecular_total_formula == report.molecular_total_summed &&
                       report.molecular_total_formula == report.molecular_oracle;
    return report;
}

}  // namespace billiard
