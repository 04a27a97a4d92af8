// Command-line front end: count regions by formula, verify formulas against
// the brute-force oracle, sweep whole parameter ranges, and render figures.
//
// Exit codes: 0 success / all-match, 1 verification mismatch, 2 bad input
// or unusable output path.

#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "billiard/billiard.hpp"

namespace {

using billiard::Count;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

json json_count(Count v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return billiard::to_string(v);  // beyond 64 bits JSON numbers stop being exact
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::vector<billiard::RectClass> all_classes(const billiard::NormalizedGrid& grid) {
    std::vector<billiard::RectClass> classes;
    const std::int64_t limit = std::min(grid.p, grid.q);
    for (std::int64_t m = 1; m < limit; ++m)
        for (std::int64_t n = 1; m + n <= limit; ++n)
            classes.push_back({m, n});
    return classes;
}

json grid_json(const billiard::NormalizedGrid& grid) {
    return json{{"p", grid.p}, {"q", grid.q}, {"g", grid.g}};
}

int run_count(std::int64_t a, std::int64_t b, const std::string& format) {
    const billiard::NormalizedGrid grid = billiard::normalize({a, b});
    const Count atomic = billiard::atomic_count(grid);
    const Count total = billiard::total_molecular(grid);

    if (format == "json") {
        json doc{{"schema", 1}, {"grid", grid_json(grid)}};
        doc["atomic"] = json{{"formula", json_count(atomic)}};
        json class_list = json::array();
        for (const auto& cls : all_classes(grid))
            class_list.push_back(json{{"m", cls.m},
                                      {"n", cls.n},
                                      {"formula", json_count(billiard::class_count(cls, grid))}});
        doc["classes"] = class_list;
        doc["molecular"] = json{{"formula", json_count(total)},
                                {"summed", json_count(billiard::total_by_summation(grid))}};
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    // totals first: the per-class table has ~q^2/2 rows and streams after
    std::cout << "table " << a << " x " << b << " -> normalized p=" << grid.p << " q=" << grid.q
              << " (g=" << grid.g << ")\n";
    std::cout << "atomic squares: " << billiard::to_string(atomic) << "   [(p-1)(q-1)/2; raw ("
              << a << "-" << grid.g << ")(" << b << "-" << grid.g << ")/(2*" << grid.g
              << "^2)]\n";
    std::cout << "molecular rectangles: " << billiard::to_string(total) << "\n";
    const std::int64_t limit = std::min(grid.p, grid.q);
    if (limit >= 2) {
        std::cout << "per-class counts (m along slope -1, n along slope +1):\n";
        Count summed = 0;
        for (std::int64_t m = 1; m < limit; ++m)
            for (std::int64_t n = 1; m + n <= limit; ++n) {
                const Count c = billiard::class_count({m, n}, grid);
                summed += c;
                std::cout << "  " << m << " x " << n << ": " << billiard::to_string(c) << "\n";
            }
        std::cout << "sum over classes: " << billiard::to_string(summed) << "\n";
    }
    return kExitOk;
}

int run_verify(std::int64_t a, std::int64_t b, const std::string& format) {
    const billiard::NormalizedGrid grid = billiard::normalize({a, b});
    const billiard::CountReport report = billiard::oracle_report(grid);

    if (format == "json") {
        json doc{{"schema", 1}, {"grid", grid_json(grid)}};
        doc["atomic"] = json{{"formula", json_count(report.atomic_formula)},
                             {"oracle", json_count(report.atomic_oracle)}};
        json class_list = json::array();
        for (const auto& entry : report.per_class)
            class_list.push_back(json{{"m", entry.cls.m},
                                      {"n", entry.cls.n},
                                      {"formula", json_count(entry.formula)},
                                      {"oracle", json_count(entry.oracle)}});
        doc["classes"] = class_list;
        doc["molecular"] = json{{"formula", json_count(report.molecular_total_formula)},
                                {"summed", json_count(report.molecular_total_summed)},
                                {"oracle", json_count(report.molecular_oracle)}};
        doc["all_match"] = report.all_match;
        std::cout << doc.dump(2) << "\n";
    } else {
        const auto flag = [](bool ok) { return ok ? "ok" : "MISMATCH"; };
        std::cout << "table " << a << " x " << b << " -> normalized p=" << grid.p
                  << " q=" << grid.q << " (g=" << grid.g << ")\n";
        std::cout << "atomic: formula=" << billiard::to_string(report.atomic_formula)
                  << " oracle=" << billiard::to_string(report.atomic_oracle)
                  << " centers=" << billiard::to_string(report.atomic_centers) << " "
                  << flag(report.atomic_formula == report.atomic_oracle &&
                          report.atomic_formula == report.atomic_centers)
                  << "\n";
        for (const auto& entry : report.per_class)
            std::cout << "class " << entry.cls.m << " x " << entry.cls.n
                      << ": formula=" << billiard::to_string(entry.formula)
                      << " oracle=" << billiard::to_string(entry.oracle) << " "
                      << flag(entry.formula == entry.oracle) << "\n";
        std::cout << "molecular: formula=" << billiard::to_string(report.molecular_total_formula)
                  << " summed=" << billiard::to_string(report.molecular_total_summed)
                  << " oracle=" << billiard::to_string(report.molecular_oracle) << " "
                  << flag(report.molecular_total_formula == report.molecular_total_summed &&
                          report.molecular_total_formula == report.molecular_oracle)
                  << "\n";
        std::cout << "all match: " << (report.all_match ? "yes" : "NO") << "\n";
    }
    return report.all_match ? kExitOk : kExitMismatch;
}

int run_sweep(std::int64_t max_side, unsigned jobs, const std::string& out_path) {
    const auto rows = billiard::run_sweep({max_side, jobs});
    if (!write_output(out_path, billiard::sweep_csv(rows))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    return billiard::all_rows_match(rows) ? kExitOk : kExitMismatch;
}

int run_render(std::int64_t a, std::int64_t b, const billiard::RenderOptions& opts,
               const std::string& out_path) {
    const billiard::NormalizedGrid grid = billiard::normalize({a, b});
    const billiard::Trajectory traj = billiard::billiard_trajectory(grid);
    if (!write_output(out_path, billiard::render(traj, opts))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corner-to-corner billiard trajectories: region counts, verification, figures"};
    app.require_subcommand(1);

    std::int64_t a = 1, b = 1;
    std::string format = "text";
    std::string out_path;
    std::int64_t max_side = 1;
    unsigned jobs = 0;
    billiard::RenderOptions render_opts;
    bool want_svg = false, want_ascii = false;

    CLI::App* count = app.add_subcommand("count", "closed-form counts for an a x b table");
    count->add_option("a", a, "table width")->required();
    count->add_option("b", b, "table height")->required();
    count->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "compare formulas with the brute-force oracle");
    verify->add_option("a", a, "table width")->required();
    verify->add_option("b", b, "table height")->required();
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "verify every coprime pair up to a bound, emit CSV");
    sweep->add_option("--max-side", max_side, "largest side to sweep")->required();
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");
    sweep->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* render = app.add_subcommand("render", "draw the trajectory as SVG or ASCII");
    render->add_option("a", a, "table width")->required();
    render->add_option("b", b, "table height")->required();
    CLI::Option* svg_flag = render->add_flag("--svg", want_svg, "emit SVG (default)");
    render->add_flag("--ascii", want_ascii, "emit ASCII art")->excludes(svg_flag);
    render->add_option("--cell-size", render_opts.cell_size, "SVG pixels per grid unit");
    render->add_flag("--highlight-atomic", render_opts.highlight_atomic,
                     "fill atomic squares green");
    render->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(a, b, format);
        if (verify->parsed()) return run_verify(a, b, format);
        if (sweep->parsed()) return run_sweep(max_side, jobs, out_path);
        render_opts.format = want_ascii ? billiard::RenderFormat::Ascii
                                        : billiard::RenderFormat::Svg;
        return run_render(a, b, render_opts, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
