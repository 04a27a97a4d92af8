#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "billiard/grid.hpp"

// Closed-form counts of the regions a billiard path carves out of the
// coprime p x q table: atomic squares and tilted m x n rectangles (m along
// slope -1, n along slope +1).
//
// Counts grow like p*q^3, so for sides up to 10^6 the results exceed 64
// bits; all count arithmetic runs in 128 bits.

namespace billiard {

using Count = __int128;

inline std::string to_string(Count v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

struct RectClass {
    std::int64_t m = 1;  // side length along slope -1
    std::int64_t n = 1;  // side length along slope +1

    friend auto operator<=>(const RectClass&, const RectClass&) = default;
};

// May go non-positive; that means the class has no placements at all.
struct PlacementCounts {
    std::int64_t horizontal = 0;
    std::int64_t vertical = 0;
};

inline Count atomic_count(const NormalizedGrid& grid) {
    if (!grid.coprime())
        throw std::invalid_argument("atomic_count requires coprime sides");
    // (p-1)(q-1) is even: coprimality makes at least one of p, q odd.
    return static_cast<Count>(grid.p - 1) * (grid.q - 1) / 2;
}

inline PlacementCounts placements(const RectClass& cls, const NormalizedGrid& grid) {
    return PlacementCounts{grid.p - cls.m - cls.n + 1, grid.q - cls.m - cls.n + 1};
}

// Half of the placements are compatible with the path. When both placement
// counts are odd (possible only for p, q both odd and m, n of opposite
// parity) the halves are unequal; the lowest-leftmost placement has its
// bottom corner at (m, 0), which lies on the path exactly when m is even.
// Hence the correction is +1 for even m and -1 for odd m. The rounding is
// never ambiguous in the other cases since P*Q is then even.
inline Count class_count(const RectClass& cls, const NormalizedGrid& grid) {
    if (!grid.coprime())
        throw std::invalid_argument("class_count requires coprime sides");
    if (cls.m < 1 || cls.n < 1)
        throw std::invalid_argument("rectangle sides must be positive");
    const PlacementCounts pc = placements(cls, grid);
    if (pc.horizontal <= 0 || pc.vertical <= 0) return 0;
    const Count product = static_cast<Count>(pc.horizontal) * pc.vertical;
    if ((pc.horizontal & 1) && (pc.vertical & 1)) {
        const Count sigma = (cls.m % 2 == 0) ? 1 : -1;
        return (product + sigma) / 2;
    }
    return product / 2;
}

inline Count total_molecular(const NormalizedGrid& grid) {
    if (!grid.coprime())
        throw std::invalid_argument("total_molecular requires coprime sides");
    const Count p = std::max(grid.p, grid.q);
    const Count q = std::min(grid.p, grid.q);
    return q * (q * q - 1) * (2 * p - q) / 24;
}

inline Count total_by_summation(const NormalizedGrid& grid) {
    if (!grid.coprime())
        throw std::invalid_argument("total_by_summation requires coprime sides");
    const std::int64_t limit = std::min(grid.p, grid.q);
    Count total = 0;
    for (std::int64_t m = 1; m < limit; ++m)
        for (std::int64_t n = 1; m + n <= limit; ++n)
            total += class_count(RectClass{m, n}, grid);
    return total;
}

inline Count power_sum(int k, std::int64_t q) {
    if (q < 0) throw std::invalid_argument("power_sum needs q >= 0");
    const Count c = q;
    switch (k) {
        case 0: return c;
        case 1: return c * (c + 1) / 2;
        case 2: return c * (c + 1) * (2 * c + 1) / 6;
        case 3: return c * c * (c + 1) * (c + 1) / 4;
        default: throw std::invalid_argument("power_sum supports k in {0,1,2,3}");
    }
}

// Formula-vs-oracle comparison for one grid, filled in by oracle_report.
struct ClassReport {
    RectClass cls;
    Count formula = 0;
    Count oracle = 0;
};

struct CountReport {
    NormalizedGrid grid;
    Count atomic_formula = 0;
    Count atomic_oracle = 0;   // geometric enumeration of 1x1 squares
    Count atomic_centers = 0;  // unvisited interior points, the second atomic oracle
    std::vector<ClassReport> per_class;
    Count molecular_total_formula = 0;
    Count molecular_total_summed = 0;
    Count molecular_oracle = 0;
    bool all_match = false;
};

}  // namespace billiard
