#include "vsg/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

namespace vsg {

std::vector<boundary_candidate> estimate_boundaries(const outcome_grid& grid, u64 max_pq,
                                                    double threshold) {
    if (grid.width() < 64 || grid.height() < 64)
        fail(errc::bad_argument, "boundary estimation needs at least a 64x64 grid");
    const std::int64_t W = static_cast<std::int64_t>(grid.width());
    const std::int64_t H = static_cast<std::int64_t>(grid.height());
    std::vector<boundary_candidate> out;

    for (u64 q = 1; q <= max_pq; ++q) {
        for (u64 p = 1; p <= max_pq; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const std::int64_t sp = static_cast<std::int64_t>(p);
            const std::int64_t sq = static_cast<std::int64_t>(q);
            // bucket cells by v = q*y - p*x; a line with offset t is v = t*q
            const std::int64_t vmin = -sp * (W - 1);
            const std::int64_t vmax = sq * (H - 1);
            const std::size_t n = static_cast<std::size_t>(vmax - vmin + 1);
            std::vector<std::int32_t> pc(n + 1, 0), cc(n + 1, 0);
            for (std::int64_t y = 0; y < H; ++y)
                for (std::int64_t x = 0; x < W; ++x) {
                    std::size_t v = static_cast<std::size_t>(sq * y - sp * x - vmin);
                    ++cc[v + 1];
                    if (grid.p(static_cast<u64>(x), static_cast<u64>(y))) ++pc[v + 1];
                }
            std::partial_sum(pc.begin(), pc.end(), pc.begin());
            std::partial_sum(cc.begin(), cc.end(), cc.begin());
            auto range_sum = [&](const std::vector<std::int32_t>& s, std::int64_t lo,
                                 std::int64_t hi) {   // v in [lo, hi)
                std::int64_t a = std::clamp(lo - vmin, std::int64_t{0}, static_cast<std::int64_t>(n));
                std::int64_t b = std::clamp(hi - vmin, std::int64_t{0}, static_cast<std::int64_t>(n));
                return s[static_cast<std::size_t>(b)] - s[static_cast<std::size_t>(a)];
            };

            const std::int64_t B = sp + sq;             // band thickness in y cells
            const std::int64_t Bq = B * sq;             // thickness in v units
            const double min_cells = 8.0 * static_cast<double>(B);
            // a candidate boundary must cross at least half the board's columns
            auto floor_div = [](std::int64_t a, std::int64_t b) {   // b > 0
                return a / b - ((a % b != 0 && a < 0) ? 1 : 0);
            };
            auto column_span = [&](std::int64_t t) {
                std::int64_t lo =
                    std::max<std::int64_t>(0, floor_div(-t * sq + sp - 1, sp));   // ceil(-t q / p)
                std::int64_t hi =
                    std::min<std::int64_t>(W - 1, floor_div((H - 1 - t) * sq, sp));
                return hi >= lo ? hi - lo + 1 : 0;
            };
            double best = -1.0;
            std::int64_t best_t = 0;
            // integer offsets t; the line is v = t*q
            for (std::int64_t t = vmin / sq - B; t <= vmax / sq + B; ++t) {
                std::int64_t v0 = t * sq;
                double cu = range_sum(cc, v0 + 1, v0 + Bq + 1);
                double cl = range_sum(cc, v0 - Bq, v0);
                if (cu < min_cells || cl < min_cells) continue;
                if (2 * column_span(t) < W) continue;
                double du = range_sum(pc, v0 + 1, v0 + Bq + 1) / cu;
                double dl = range_sum(pc, v0 - Bq, v0) / cl;
                double score = std::fabs(du - dl);
                if (score > best) {
                    best = score;
                    best_t = t;
                }
            }
            // keep the strongest offset per slope
            if (best >= threshold) out.push_back({rational(sp, sq), rational(best_t), best});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const boundary_candidate& a, const boundary_candidate& b) {
                         return a.score > b.score;
                     });
    return out;
}

namespace {

rational line_y_at(const boundary_candidate& line, std::int64_t x) {
    return line.slope * rational(x) + line.offset;
}

} // namespace

segmentation_report verify_segmentation(const outcome_grid& grid, const ruleset& rules,
                                        const std::vector<boundary_candidate>& lines) {
    segmentation_report rep;
    rep.boundaries = lines;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i].slope < lines[i - 1].slope)
            fail(errc::bad_argument, "boundaries must be sorted by slope");
    const std::int64_t W = static_cast<std::int64_t>(grid.width());
    const std::int64_t H = static_cast<std::int64_t>(grid.height());
    // boundaries must not cross inside the board
    for (std::size_t i = 1; i < lines.size(); ++i)
        for (std::int64_t x = 0; x < W; ++x) {
            rational ylo = line_y_at(lines[i - 1], x);
            rational yhi = line_y_at(lines[i], x);
            if (yhi < ylo && rational(0) <= ylo && yhi < rational(H))
                fail(errc::bad_argument, "boundary lines cross inside the board");
        }

    rep.k = lines.size() + 1;
    for (std::size_t i = 0; i <= lines.size(); ++i) {
        wedge_summary ws;
        if (i > 0) ws.wedge.lower = {lines[i - 1].slope, lines[i - 1].offset};
        if (i < lines.size()) ws.wedge.upper = {lines[i].slope, lines[i].offset};

        // probe slope: mediant of the bounding slopes, or the single bound's
        rational slope;
        if (ws.wedge.lower && ws.wedge.upper)
            slope = rational(ws.wedge.lower->first.num + ws.wedge.upper->first.num,
                             ws.wedge.lower->first.den + ws.wedge.upper->first.den);
        else if (ws.wedge.lower)
            slope = ws.wedge.lower->first;
        else if (ws.wedge.upper)
            slope = ws.wedge.upper->first;
        else
            slope = rational(1);
        if (slope.num <= 0) slope = rational(1, slope.den);

        std::int64_t xm = W / 2;
        rational ylo = ws.wedge.lower ? line_y_at({ws.wedge.lower->first, ws.wedge.lower->second}, xm)
                                      : rational(0);
        rational yhi = ws.wedge.upper ? line_y_at({ws.wedge.upper->first, ws.wedge.upper->second}, xm)
                                      : rational(H - 1);
        if (ylo < rational(0)) ylo = rational(0);
        if (rational(H - 1) < yhi) yhi = rational(H - 1);
        bool any = false, all = true;
        for (int frac = 1; frac <= 3 && !(yhi < ylo); ++frac) {
            // target height at x = xm, a quarter of the wedge per step
            rational yt = ylo + (yhi - ylo) * rational(frac, 4);
            // anchor the probe line on a lattice point: x a multiple of q near
            // xm, y the rounded target height, so the offset is an integer
            std::int64_t xa = (xm / slope.den) * slope.den;
            std::int64_t ya = (yt.num + yt.den / 2) / yt.den;
            rational m = rational(ya) - slope * rational(xa);
            try {
                line_spec ls(static_cast<u64>(slope.num), static_cast<u64>(slope.den), m);
                period_report pr = line_period(grid, rules, ls);
                ws.probes.push_back(pr);
                any = true;
                if (!pr.found) all = false;
            } catch (const error&) {
                // probe line misses the board or has too few lattice points
            }
        }
        ws.certified = any && all;
        rep.wedges.push_back(std::move(ws));
    }

    u64 inside = 0;
    for (std::int64_t y = 0; y < H; ++y)
        for (std::int64_t x = 0; x < W; ++x) {
            bool on_line = false;
            for (const auto& l : lines)
                if (line_y_at(l, x) == rational(y)) on_line = true;
            if (!on_line) ++inside;
        }
    rep.coverage = static_cast<double>(inside) / (static_cast<double>(W) * static_cast<double>(H));
    rep.pass = std::all_of(rep.wedges.begin(), rep.wedges.end(),
                           [](const wedge_summary& w) { return w.certified; });
    return rep;
}

percolation_result n_percolates(const outcome_grid& grid, const segment_spec& segment,
                                int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        fail(errc::bad_argument, "connectivity must be 4 or 8");
    const u64 W = grid.width(), H = grid.height();
    u64 smin = std::numeric_limits<u64>::max(), smax = 0;
    for (u64 y = 0; y < H; ++y)
        for (u64 x = 0; x < W; ++x)
            if (segment.contains(x, y)) {
                smin = std::min(smin, x + y);
                smax = std::max(smax, x + y);
            }
    if (smin > smax || smax - smin < 16)
        fail(errc::bad_argument, "segment is degenerate on this board");
    u64 span = smax - smin;
    u64 start_cut = smin + span / 10;
    u64 goal_cut = smin + span - span / 10;

    percolation_result res;
    res.connectivity = connectivity;
    std::vector<char> seen(W * H, 0);
    std::deque<u64> queue;
    auto try_push = [&](u64 x, u64 y) {
        if (x >= W || y >= H) return;
        u64 idx = y * W + x;
        if (seen[idx]) return;
        if (grid.p(x, y) || !segment.contains(x, y)) return;
        seen[idx] = 1;
        queue.push_back(idx);
    };
    for (u64 y = 0; y < H; ++y)
        for (u64 x = 0; x < W; ++x)
            if (x + y <= start_cut) try_push(x, y);

    u64 best = 0;
    position best_cell{0, 0};
    while (!queue.empty()) {
        u64 idx = queue.front();
        queue.pop_front();
        u64 x = idx % W, y = idx / W;
        ++res.path_cells;
        if (x + y >= best) {
            best = x + y;
            best_cell = {x, y};
        }
        try_push(x + 1, y);
        try_push(x, y + 1);
        if (x > 0) try_push(x - 1, y);
        if (y > 0) try_push(x, y - 1);
        if (connectivity == 8) {
            try_push(x + 1, y + 1);
            if (x > 0) try_push(x - 1, y + 1);
            if (y > 0) try_push(x + 1, y - 1);
            if (x > 0 && y > 0) try_push(x - 1, y - 1);
        }
    }
    res.frontier = best_cell;
    res.percolates = res.path_cells > 0 && best >= goal_cut;
    return res;
}

} // namespace vsg
