#pragma once

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "billiard/oracle.hpp"

// Exhaustive formula-vs-oracle verification over every coprime pair
// 1 <= q <= p <= max_side. Pairs are independent jobs; workers pull from a
// shared counter and write into a pre-sized slot, so the emitted rows are
// sorted by (p, q) no matter how the scheduler interleaves them.

namespace billiard {

struct SweepSpec {
    std::int64_t max_side = 1;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

struct SweepRow {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Count atomic_formula = 0;
    Count atomic_oracle = 0;
    Count molecular_formula = 0;
    Count molecular_summed = 0;
    Count molecular_oracle = 0;
    bool match = false;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_side) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t p = 1; p <= max_side; ++p)
        for (std::int64_t q = 1; q <= p; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    return pairs;
}

inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.max_side < 1) throw std::invalid_argument("sweep needs max_side >= 1");
    const auto pairs = coprime_pairs(spec.max_side);
    std::vector<SweepRow> rows(pairs.size());

    unsigned jobs = spec.jobs != 0 ? spec.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size()));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
            const CountReport report = oracle_report(NormalizedGrid{pairs[i].first, pairs[i].second, 1});
            rows[i] = SweepRow{report.grid.p,
                               report.grid.q,
                               report.atomic_formula,
                               report.atomic_oracle,
                               report.molecular_total_formula,
                               report.molecular_total_summed,
                               report.molecular_oracle,
                               report.all_match};
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "p,q,atomic_formula,atomic_oracle,molecular_formula,molecular_summed,molecular_oracle,match";

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const SweepRow& row : rows) {
        out += std::to_string(row.p) + ',' + std::to_string(row.q) + ',' +
               to_string(row.atomic_formula) + ',' + to_string(row.atomic_oracle) + ',' +
               to_string(row.molecular_formula) + ',' + to_string(row.molecular_summed) + ',' +
               to_string(row.molecular_oracle) + ',' + (row.match ? "true" : "false") + '\n';
    }
    return out;
}

inline bool all_rows_match(const std::vector<SweepRow>& rows) {
    for (const SweepRow& row : rows)
        if (!row.match) return false;
    return true;
}

}  // namespace billiard
