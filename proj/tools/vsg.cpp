#include <chrono>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vsg/automaton.hpp"
#include "vsg/closed_form.hpp"
#include "vsg/core.hpp"
#include "vsg/io.hpp"
#include "vsg/oracle.hpp"
#include "vsg/periodicity.hpp"
#include "vsg/segmentation.hpp"

namespace {

using namespace vsg;

struct common_opts {
    std::string ruleset_text;
    std::string board = "";
    std::string out_file;
    std::string json_file;
    u64 budget_mib = 2048;
};

std::pair<u64, u64> parse_board(const std::string& b) {
    auto x = b.find('x');
    if (x == std::string::npos) fail(errc::parse, "board must be WxH");
    try {
        return {std::stoull(b.substr(0, x)), std::stoull(b.substr(x + 1))};
    } catch (const std::exception&) {
        fail(errc::parse, "board must be WxH");
    }
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_argument, "cannot open " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void emit(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") std::cout << bytes;
    else write_file(path, bytes);
}

std::string render_by_extension(const outcome_grid& g, const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "pbm" : path.substr(dot + 1);
    if (ext == "pbm") return render_pbm(g);
    if (ext == "ppm") return render_ppm(g);
    if (ext == "raw" || ext == "bin") return render_raw(g);
    if (ext == "csv") return render_csv(g);
    fail(errc::bad_argument, "unknown output format ." + ext);
}

line_spec parse_line_flag(const std::string& text) {
    // p/q+m, e.g. "9/8+2" or "1/1+-4/5"
    auto slash = text.find('/');
    auto plus = text.find('+', slash == std::string::npos ? 0 : slash);
    if (slash == std::string::npos || plus == std::string::npos)
        fail(errc::parse, "line must look like p/q+m");
    u64 p = std::stoull(text.substr(0, slash));
    u64 q = std::stoull(text.substr(slash + 1, plus - slash - 1));
    std::string mtext = text.substr(plus + 1);
    rational m;
    auto mslash = mtext.find('/');
    if (mslash == std::string::npos) m = rational(std::stoll(mtext));
    else m = rational(std::stoll(mtext.substr(0, mslash)), std::stoll(mtext.substr(mslash + 1)));
    return line_spec(p, q, m);
}

int cmd_grid(const common_opts& o) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    auto [w, h] = parse_board(o.board.empty() ? "64x64" : o.board);
    outcome_grid g = compute_grid(rules, w, h, o.budget_mib << 20);
    emit(o.out_file, render_by_extension(g, o.out_file));
    return 0;
}

int cmd_solve(const common_opts& o, const std::string& pos_text) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    position pos = parse_position(pos_text, rules.dimension());
    outcome res;
    if (rules.size() == 1 && rules.dimension() == 2) {
        res = solve_one_move_2d(rules.move(0)[0], rules.move(0)[1], pos[0], pos[1]);
    } else if (rules.size() == 1 && rules.dimension() == 1) {
        res = pos[0] % (2 * rules.move(0)[0]) < rules.move(0)[0] ? outcome::P : outcome::N;
    } else if (rules.size() == 2) {
        res = solve_two_move_dd(rules, pos);
    } else {
        // no closed form: fall back to the DP oracle on the enclosing box
        std::vector<u64> bounds(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) bounds[i] = pos[i] + 1;
        outcome_box box = compute_dd(rules, bounds, o.budget_mib << 20);
        res = box.p(pos) ? outcome::P : outcome::N;
    }
    std::cout << outcome_char(res) << "\n";
    return 0;
}

int cmd_periods(const common_opts& o, const std::string& line_flag, const std::string& rows,
                const std::string& cols) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    auto [w, h] = parse_board(o.board.empty() ? "1024x32" : o.board);
    std::vector<period_report> reports;
    if (rules.dimension() == 1) {
        outcome_sequence seq = compute_sequence(rules, w, o.budget_mib << 20);
        reports.push_back(find_eventual_period(seq, rules.max_component()));
    } else {
        outcome_grid g = compute_grid(rules, w, h, o.budget_mib << 20);
        auto parse_range = [&](const std::string& r, u64 hi_default) -> std::pair<u64, u64> {
            if (r.empty()) return {0, hi_default};
            auto colon = r.find(':');
            if (colon == std::string::npos) {
                u64 v = std::stoull(r);
                return {v, v + 1};
            }
            return {std::stoull(r.substr(0, colon)), std::stoull(r.substr(colon + 1))};
        };
        if (!line_flag.empty()) {
            reports.push_back(line_period(g, rules, parse_line_flag(line_flag)));
        } else if (!cols.empty()) {
            auto [lo, hi] = parse_range(cols, g.width());
            reports = column_periods(g, rules, lo, hi);
        } else {
            auto [lo, hi] = parse_range(rows, std::min<u64>(g.height(), 32));
            reports = row_periods(g, rules, lo, hi);
        }
    }
    if (!o.json_file.empty()) emit(o.json_file, json_report(reports));
    emit(o.out_file, render_csv(reports));
    return std::all_of(reports.begin(), reports.end(),
                       [](const period_report& r) { return r.found; })
               ? 0
               : 1;
}

int cmd_scheme(const common_opts& o, const std::string& builtin, const std::string& file,
               bool no_verify) {
    builtin_scheme bs = [&]() {
        if (!builtin.empty()) return builtin_by_name(builtin);
        if (file.empty()) fail(errc::bad_argument, "need --builtin or a scheme file");
        std::ifstream in(file);
        if (!in) fail(errc::bad_argument, "cannot open " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        builtin_scheme out{"file", parse_scheme(text),
                           parse_ruleset(o.ruleset_text.empty() ? "1,1" : o.ruleset_text),
                           {}};
        return out;
    }();
    if (!o.ruleset_text.empty()) bs.rules = parse_ruleset(o.ruleset_text);
    auto [w, h] = parse_board(o.board.empty() ? "64x64" : o.board);
    colored_grid colors = run_scheme(bs.scheme, w, h, o.budget_mib << 20);
    outcome_grid g = compute_grid(bs.rules, w, h, o.budget_mib << 20);
    if (!o.out_file.empty()) emit(o.out_file, render_ppm(g, colors));
    if (no_verify) return 0;
    verification_report rep = verify_segment(bs.scheme, g);
    std::vector<verification_report> reports{rep};
    if (!o.json_file.empty()) emit(o.json_file, json_report(reports));
    std::cerr << rep.claim << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_segments(const common_opts& o, int connectivity) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    auto [w, h] = parse_board(o.board.empty() ? "200x200" : o.board);
    outcome_grid g = compute_grid(rules, w, h, o.budget_mib << 20);
    auto cands = estimate_boundaries(g);
    // keep the best offset per distinct slope, then the top few by score
    std::vector<boundary_candidate> picked;
    for (const auto& c : cands) {
        bool seen = std::any_of(picked.begin(), picked.end(), [&](const boundary_candidate& p) {
            return p.slope == c.slope;
        });
        if (!seen) picked.push_back(c);
        if (picked.size() == 3) break;
    }
    std::sort(picked.begin(), picked.end(),
              [](const boundary_candidate& a, const boundary_candidate& b) {
                  return a.slope < b.slope;
              });
    segmentation_report rep = verify_segmentation(g, rules, picked);
    std::string json = json_report(rep);
    // percolation verdict per wedge at the requested connectivity
    for (const auto& ws : rep.wedges) {
        try {
            percolation_result pr = n_percolates(g, ws.wedge, connectivity);
            std::cerr << "wedge " << ws.wedge.str() << " percolates: "
                      << (pr.percolates ? "yes" : "no") << "\n";
        } catch (const error&) {
            std::cerr << "wedge " << ws.wedge.str() << " too thin for percolation\n";
        }
    }
    emit(o.json_file.empty() ? o.out_file : o.json_file, json);
    return rep.pass ? 0 : 1;
}

int cmd_verify(const common_opts& o) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    auto [w, h] = parse_board(o.board.empty() ? "100x100" : o.board);
    outcome_grid g = compute_grid(rules, w, h, o.budget_mib << 20);
    std::vector<verification_report> reports;
    if (rules.size() == 2) reports.push_back(verify_ptop(g, rules));
    else if (rules.size() == 3) reports = verify_three_move_lemmas(g, rules);
    else fail(errc::bad_argument, "verify supports two- and three-move rulesets");
    for (const auto& r : reports)
        std::cerr << r.claim << ": "
                  << (r.pass ? "pass" : (r.advisory ? "fails (advisory)" : "FAIL")) << "\n";
    if (!o.json_file.empty()) emit(o.json_file, json_report(reports));
    return reports_pass(reports) ? 0 : 1;
}

int cmd_bench(const common_opts& o, u64 seed) {
    ruleset rules = parse_ruleset(o.ruleset_text);
    if (rules.size() != 2) fail(errc::shape_mismatch, "bench needs a two-move ruleset");
    std::mt19937_64 rng(seed);
    std::string csv = "magnitude,queries,median_ns,p99_ns,oracle\n";
    const u64 queries = 100000;
    for (int bits : {8, 16, 32, 60}) {
        u64 mag = u64{1} << bits;
        std::uniform_int_distribution<u64> dist(0, mag - 1);
        std::vector<position> work(queries, position(rules.dimension()));
        for (auto& pos : work)
            for (auto& c : pos) c = dist(rng);
        for (u64 i = 0; i < 100; ++i) (void)solve_two_move_dd(rules, work[i % queries]);
        std::vector<double> lat(queries);
        auto t0 = std::chrono::steady_clock::now();
        unsigned sink = 0;
        for (u64 i = 0; i < queries; ++i)
            sink ^= static_cast<unsigned>(solve_two_move_dd(rules, work[i]));
        auto t1 = std::chrono::steady_clock::now();
        double per = std::chrono::duration<double, std::nano>(t1 - t0).count() / queries;
        // per-query timer resolution is too coarse below ~100ns; batch timing
        // gives the median, percentile sampled on a slice
        const u64 sample = 1000;
        for (u64 i = 0; i < sample; ++i) {
            auto a = std::chrono::steady_clock::now();
            sink ^= static_cast<unsigned>(solve_two_move_dd(rules, work[i]));
            auto b = std::chrono::steady_clock::now();
            lat[i] = std::chrono::duration<double, std::nano>(b - a).count();
        }
        std::sort(lat.begin(), lat.begin() + sample);
        double p99 = lat[static_cast<std::size_t>(sample * 99 / 100)];
        bool oracle_feasible = bits <= 14;   // mag^2 cells within the default budget
        std::string oracle = "infeasible";
        if (oracle_feasible) {
            auto a = std::chrono::steady_clock::now();
            outcome_grid g = compute_grid(rules, mag, mag, o.budget_mib << 20);
            auto b = std::chrono::steady_clock::now();
            oracle = std::to_string(
                std::chrono::duration<double, std::milli>(b - a).count());
            sink ^= static_cast<unsigned>(g.p(mag - 1, mag - 1));
        }
        csv += "2^" + std::to_string(bits) + "," + std::to_string(queries) + "," +
               std::to_string(per) + "," + std::to_string(p99) + "," + oracle + "\n";
        if (sink == 0xdeadbeef) std::cerr << "";   // keep the sink alive
    }
    emit(o.out_file, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite vector subtraction games: oracles, solvers, schemes"};
    app.require_subcommand(1);

    common_opts o;
    std::string pos_text, line_flag, rows, cols, builtin, scheme_file;
    int connectivity = 4;
    u64 seed = 1;
    bool no_verify = false;

    auto add_common = [&](CLI::App* sub, bool need_s) {
        auto* s = sub->add_option("-s,--ruleset", o.ruleset_text, "ruleset, e.g. \"2,1;1,3\"");
        if (need_s) s->required();
        sub->add_option("-b,--board", o.board, "board WxH");
        sub->add_option("-o,--out", o.out_file, "output file (- for stdout)");
        sub->add_option("--json", o.json_file, "JSON report file");
        sub->add_option("--budget", o.budget_mib, "memory budget in MiB");
    };

    auto* c_grid = app.add_subcommand("grid", "compute an outcome grid and render it");
    add_common(c_grid, true);
    auto* c_solve = app.add_subcommand("solve", "decide one position in O(bit-length)");
    add_common(c_solve, true);
    c_solve->add_option("-p,--position", pos_text, "position, e.g. \"5,6\"")->required();
    auto* c_periods = app.add_subcommand("periods", "eventual periods of rows/columns/lines");
    add_common(c_periods, true);
    c_periods->add_option("--line", line_flag, "line p/q+m");
    c_periods->add_option("--rows", rows, "row range lo:hi");
    c_periods->add_option("--cols", cols, "column range lo:hi");
    auto* c_scheme = app.add_subcommand("scheme", "run a coloring scheme and verify it");
    add_common(c_scheme, false);
    c_scheme->add_option("--builtin", builtin, "builtin scheme name:params");
    c_scheme->add_option("-f,--file", scheme_file, "scheme text file");
    c_scheme->add_flag("--no-verify", no_verify, "render only");
    auto* c_segments = app.add_subcommand("segments", "estimate and certify a segmentation");
    add_common(c_segments, true);
    c_segments->add_option("--connectivity", connectivity, "4 or 8");
    auto* c_verify = app.add_subcommand("verify", "grid-level lemma verification");
    add_common(c_verify, true);
    auto* c_bench = app.add_subcommand("bench", "closed form vs oracle latency table");
    add_common(c_bench, true);
    c_bench->add_option("--seed", seed, "workload RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_grid->parsed()) return cmd_grid(o);
        if (c_solve->parsed()) return cmd_solve(o, pos_text);
        if (c_periods->parsed()) return cmd_periods(o, line_flag, rows, cols);
        if (c_scheme->parsed()) return cmd_scheme(o, builtin, scheme_file, no_verify);
        if (c_segments->parsed()) return cmd_segments(o, connectivity);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_bench->parsed()) return cmd_bench(o, seed);
    } catch (const vsg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
