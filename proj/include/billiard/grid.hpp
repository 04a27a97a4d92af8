#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

// Lattice bookkeeping for corner-to-corner billiards on integer rectangles.
//
// An a x b table is reduced to its coprime p x q form (g = gcd(a,b) unit
// segments per reduced cell); everything downstream works on the reduced
// grid, whose points are classified by position (corner / boundary /
// interior) and by parity of x+y.

namespace billiard {

struct TableSpec {
    std::int64_t a = 1;  // width in grid units
    std::int64_t b = 1;  // height in grid units
};

struct NormalizedGrid {
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::int64_t g = 1;  // segment scale: a = p*g, b = q*g

    bool coprime() const { return std::gcd(p, q) == 1; }
};

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class PointClass { Interior, Boundary, Corner };
enum class Parity { Even, Odd };

inline NormalizedGrid normalize(const TableSpec& spec) {
    if (spec.a < 1 || spec.b < 1)
        throw std::invalid_argument("table sides must be positive, got " +
                                    std::to_string(spec.a) + " x " + std::to_string(spec.b));
    const std::int64_t g = std::gcd(spec.a, spec.b);
    return NormalizedGrid{spec.a / g, spec.b / g, g};
}

inline bool in_grid(const GridPoint& pt, const NormalizedGrid& grid) {
    return pt.x >= 0 && pt.x <= grid.p && pt.y >= 0 && pt.y <= grid.q;
}

inline PointClass classify(const GridPoint& pt, const NormalizedGrid& grid) {
    if (!in_grid(pt, grid))
        throw std::out_of_range("point (" + std::to_string(pt.x) + "," + std::to_string(pt.y) +
                                ") outside " + std::to_string(grid.p) + " x " +
                                std::to_string(grid.q) + " grid");
    const bool x_edge = (pt.x == 0 || pt.x == grid.p);
    const bool y_edge = (pt.y == 0 || pt.y == grid.q);
    if (x_edge && y_edge) return PointClass::Corner;
    if (x_edge || y_edge) return PointClass::Boundary;
    return PointClass::Interior;
}

// x+y and x-y agree mod 2, so either convention names the same classes.
inline Parity parity(const GridPoint& pt) {
    return ((pt.x + pt.y) & 1) == 0 ? Parity::Even : Parity::Odd;
}

inline std::int64_t interior_count(const NormalizedGrid& grid) {
    return (grid.p - 1) * (grid.q - 1);
}

}  // namespace billiard
