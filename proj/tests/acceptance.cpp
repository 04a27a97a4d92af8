// Acceptance suite: end-to-end checks of the counting engine, the two
// trajectory models, and the CLI surface. Each check prints one PASS/FAIL
// line; the process exits nonzero if any check fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "billiard/billiard.hpp"
#include "support/run_command.hpp"

using namespace billiard;
using json = nlohmann::json;
using testsupport::count_occurrences;
using testsupport::run_command;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : (" [" + detail + "]").c_str());
    if (!ok) ++g_failures;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_square(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t p = 1; p <= bound; ++p)
        for (std::int64_t q = 1; q <= bound; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    return pairs;
}

struct TimedRun {
    testsupport::CommandResult result;
    double seconds = 0.0;
};

TimedRun timed_run(const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    TimedRun run{run_command(command), 0.0};
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

// 1. verify 5 4: atomic 6, molecular 15, formula == oracle, under a second.
void criterion1(const std::string& cli) {
    const TimedRun run = timed_run(cli + " verify 5 4 --format json");
    bool ok = run.result.exit_code == 0 && run.seconds < 1.0;
    std::string detail;
    try {
        const json doc = json::parse(run.result.out);
        ok = ok && doc["atomic"]["formula"] == 6 && doc["atomic"]["oracle"] == 6 &&
             doc["molecular"]["formula"] == 15 && doc["molecular"]["summed"] == 15 &&
             doc["molecular"]["oracle"] == 15 && doc["all_match"] == true;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "verify 5 4 -> atomic 6, molecular 15, formula = oracle", ok, detail);
}

// 2. verify 8 6 reduces to 4x3: atomic 3, molecular 5, classes 3/1/1.
void criterion2(const std::string& cli) {
    const TimedRun run = timed_run(cli + " verify 8 6 --format json");
    bool ok = run.result.exit_code == 0 && run.seconds < 1.0;
    std::string detail;
    try {
        const json doc = json::parse(run.result.out);
        ok = ok && doc["grid"]["p"] == 4 && doc["grid"]["q"] == 3 && doc["grid"]["g"] == 2 &&
             doc["atomic"]["formula"] == 3 && doc["atomic"]["oracle"] == 3 &&
             doc["molecular"]["formula"] == 5 && doc["molecular"]["oracle"] == 5 &&
             doc["all_match"] == true;
        std::map<std::pair<int, int>, std::pair<int, int>> classes;
        for (const auto& entry : doc["classes"])
            classes[{entry["m"], entry["n"]}] = {entry["formula"], entry["oracle"]};
        const std::map<std::pair<int, int>, std::pair<int, int>> expected{
            {{1, 1}, {3, 3}}, {{2, 1}, {1, 1}}, {{1, 2}, {1, 1}}};
        ok = ok && classes == expected;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "verify 8 6 -> 4x3 with atomic 3, classes {1x1:3, 2x1:1, 1x2:1}", ok, detail);
}

// 3. every coprime pair up to 40: all four formula routes equal the oracle.
void criterion3() {
    const auto rows = run_sweep({40, 0});
    const std::size_t expected_rows = coprime_pairs(40).size();
    bool ok = rows.size() == expected_rows;
    for (const SweepRow& row : rows) ok = ok && row.match;
    report(3, "exhaustive sweep p,q <= 40: formulas = oracle on every row", ok,
           std::to_string(rows.size()) + " grids");
}

// 4. 5x3 totals 7 by formula, summation, and oracle; the unsigned variant
//    of the parity correction would report 8 instead.
void criterion4() {
    const CountReport report53 = oracle_report({5, 3, 1});
    Count unsigned_total = 0;
    for (std::int64_t m = 1; m < 3; ++m)
        for (std::int64_t n = 1; m + n <= 3; ++n) {
            const PlacementCounts pc = placements({m, n}, {5, 3, 1});
            const Count product = static_cast<Count>(pc.horizontal) * pc.vertical;
            unsigned_total += (product + ((pc.horizontal & 1) && (pc.vertical & 1) ? 1 : 0)) / 2;
        }
    const bool ok = total_molecular({5, 3, 1}) == 7 && total_by_summation({5, 3, 1}) == 7 &&
                    report53.molecular_oracle == 7 && report53.all_match && unsigned_total == 8;
    report(4, "5x3 total is 7 (signed correction); unsigned +1/2 would give 8", ok);
}

// 5. n -> (n mod 2p, n mod 2q) is a bijection onto the even residues.
void criterion5() {
    bool ok = true;
    for (const auto& [p, q] : coprime_square(25)) {
        const NormalizedGrid grid{p, q, 1};
        std::set<AsteroidPoint> image;
        for (std::int64_t n = 0; n < 2 * p * q; ++n) image.insert(asteroid_point(n, grid));
        std::set<AsteroidPoint> even;
        for (std::int64_t x = 0; x < 2 * p; ++x)
            for (std::int64_t y = 0; y < 2 * q; ++y)
                if ((x + y) % 2 == 0) even.insert({x, y});
        ok = ok && image.size() == static_cast<std::size_t>(2 * p * q) && image == even;
    }
    report(5, "asteroid map is injective onto the 2pq even residues (p,q <= 25)", ok);
}

// 6. folded asteroid model and direct reflection simulation coincide.
void criterion6() {
    bool ok = true;
    for (const auto& [p, q] : coprime_square(40)) {
        const Trajectory folded = billiard_trajectory({p, q, 1});
        const Trajectory walked = reflective_walk({p, q, 1});
        ok = ok && folded.visited == walked.visited && folded.segments == walked.segments;
    }
    report(6, "asteroid+fold and reflective walk agree (p,q <= 40)", ok);
}

// 7. the path covers exactly the even half of the lattice, boundary and
//    interior alike.
void criterion7() {
    bool ok = true;
    for (const auto& [p, q] : coprime_square(40)) {
        const NormalizedGrid grid{p, q, 1};
        const std::set<GridPoint> seen = visited_point_set(billiard_trajectory(grid));
        std::set<GridPoint> even;
        std::int64_t interior_seen = 0, boundary_seen = 0;
        for (std::int64_t x = 0; x <= p; ++x)
            for (std::int64_t y = 0; y <= q; ++y)
                if (parity({x, y}) == Parity::Even) even.insert({x, y});
        for (const GridPoint& pt : seen)
            (classify(pt, grid) == PointClass::Interior ? interior_seen : boundary_seen) += 1;
        ok = ok && seen == even && interior_seen == (p - 1) * (q - 1) / 2 &&
             boundary_seen == p + q;
    }
    report(7, "half coverage: even points, (p-1)(q-1)/2 interior, p+q boundary", ok);
}

// 8. byte-identical sweeps across job counts; six green squares in the SVG.
void criterion8(const std::string& cli) {
    const auto serial = run_command(cli + " sweep --max-side 20 --jobs 1");
    const auto parallel = run_command(cli + " sweep --max-side 20 --jobs 8");
    const auto svg = run_command(cli + " render 5 4 --svg --highlight-atomic");
    const bool ok = serial.exit_code == 0 && parallel.exit_code == 0 &&
                    !serial.out.empty() && serial.out == parallel.out &&
                    svg.exit_code == 0 &&
                    count_occurrences(svg.out, "fill=\"#2e8b57\"") == 6;
    report(8, "deterministic sweep across --jobs; 6 green fills in 5x4 SVG", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
        return 2;
    }
    const std::string cli = std::string("'") + argv[1] + "'";

    criterion1(cli);
    criterion2(cli);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(cli);

    if (g_failures == 0) {
        std::printf("all 8 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
