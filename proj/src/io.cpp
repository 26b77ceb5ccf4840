#include "vsg/io.hpp"

#include <cstring>
#include <sstream>

#include <json.hpp>

namespace vsg {

using nlohmann::json;

std::string render_pbm(const outcome_grid& grid) {
    std::string out = "P1\n" + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + "\n";
    for (u64 row = 0; row < grid.height(); ++row) {
        u64 y = grid.height() - 1 - row;
        for (u64 x = 0; x < grid.width(); ++x) out += grid.p(x, y) ? '1' : '0';
        out += '\n';
    }
    return out;
}

outcome_grid parse_pbm(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string magic;
    u64 w = 0, h = 0;
    in >> magic >> w >> h;
    if (magic != "P1" || !in) fail(errc::parse, "not a PBM P1 file");
    outcome_grid g(w, h);
    u64 count = 0;
    char ch;
    while (count < w * h && in.get(ch)) {
        if (ch != '0' && ch != '1') continue;
        u64 x = count % w;
        u64 y = h - 1 - count / w;
        if (ch == '1') g.set_p(x, y);
        ++count;
    }
    if (count != w * h) fail(errc::parse, "PBM file truncated");
    return g;
}

namespace {

void put_px(std::string& out, unsigned char r, unsigned char g, unsigned char b) {
    out.push_back(static_cast<char>(r));
    out.push_back(static_cast<char>(g));
    out.push_back(static_cast<char>(b));
}

// palette for colored grids, cycled by color id
constexpr unsigned char palette[][3] = {
    {204, 0, 0},  {0, 153, 0},   {0, 64, 220},  {150, 60, 180},
    {230, 160, 0}, {0, 180, 180}, {120, 120, 40}, {240, 110, 170},
};

} // namespace

std::string render_ppm(const outcome_grid& grid) {
    std::string out = "P6\n" + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + "\n255\n";
    for (u64 row = 0; row < grid.height(); ++row) {
        u64 y = grid.height() - 1 - row;
        for (u64 x = 0; x < grid.width(); ++x) {
            if (grid.p(x, y)) put_px(out, 0, 0, 0);
            else put_px(out, 255, 255, 255);
        }
    }
    return out;
}

std::string render_ppm(const outcome_grid& grid, const colored_grid& colors) {
    if (colors.width() != grid.width() || colors.height() != grid.height())
        fail(errc::shape_mismatch, "color layer does not match grid");
    std::string out = "P6\n" + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + "\n255\n";
    for (u64 row = 0; row < grid.height(); ++row) {
        u64 y = grid.height() - 1 - row;
        for (u64 x = 0; x < grid.width(); ++x) {
            if (colors.colored(x, y)) {
                const auto& c = palette[colors.at(x, y) % 8];
                put_px(out, c[0], c[1], c[2]);
            } else if (grid.p(x, y)) {
                put_px(out, 180, 180, 180);   // P but uncolored
            } else {
                put_px(out, 255, 255, 255);
            }
        }
    }
    return out;
}

std::string render_raw(const outcome_grid& grid) {
    if (grid.width() > 0xffffffffULL || grid.height() > 0xffffffffULL)
        fail(errc::overflow, "raw dump dimensions limited to 32 bits");
    std::string out("VSGRID\0\0", 8);
    auto put_u32 = [&](u64 v) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put_u32(grid.width());
    put_u32(grid.height());
    for (u64 w : grid.words())
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((w >> (8 * i)) & 0xff));
    return out;
}

outcome_grid parse_raw(const std::string& bytes) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), "VSGRID\0\0", 8) != 0)
        fail(errc::parse, "not a raw grid dump");
    auto get_u32 = [&](std::size_t off) {
        u64 v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<u64>(static_cast<unsigned char>(bytes[off + i])) << (8 * i);
        return v;
    };
    u64 w = get_u32(8), h = get_u32(12);
    outcome_grid g(w, h);
    u64 nwords = g.words().size();
    if (bytes.size() != 16 + nwords * 8) fail(errc::parse, "raw grid dump truncated");
    for (u64 i = 0; i < nwords; ++i) {
        u64 word = 0;
        for (int j = 0; j < 8; ++j)
            word |= static_cast<u64>(static_cast<unsigned char>(bytes[16 + i * 8 + j]))
                    << (8 * j);
        g.words()[i] = word;
    }
    return g;
}

std::string render_csv(const outcome_grid& grid) {
    std::string out = "x,y,outcome\n";
    for (u64 y = 0; y < grid.height(); ++y)
        for (u64 x = 0; x < grid.width(); ++x) {
            out += std::to_string(x) + "," + std::to_string(y) + "," +
                   (grid.p(x, y) ? 'P' : 'N');
            out += '\n';
        }
    return out;
}

std::string render_csv(const std::vector<period_report>& reports) {
    std::string out = "index,found,preperiod,period,search_bound\n";
    for (const auto& r : reports)
        out += r.index + "," + (r.found ? "true" : "false") + "," +
               std::to_string(r.preperiod) + "," + std::to_string(r.period) + "," +
               std::to_string(r.search_bound) + "\n";
    return out;
}

namespace {

json to_json(const verification_report& r) {
    json cxs = json::array();
    for (const auto& pos : r.counterexamples) cxs.push_back(pos);
    return {{"claim", r.claim},
            {"pass", r.pass},
            {"advisory", r.advisory},
            {"counterexamples", cxs},
            {"cells_checked", r.cells_checked}};
}

json to_json(const period_report& r) {
    return {{"index", r.index},
            {"found", r.found},
            {"preperiod", r.preperiod},
            {"period", r.period},
            {"search_bound", r.search_bound}};
}

} // namespace

std::string json_report(const std::vector<verification_report>& reports) {
    json j{{"schema", 1}, {"pass", reports_pass(reports)}};
    j["checks"] = json::array();
    for (const auto& r : reports) j["checks"].push_back(to_json(r));
    return j.dump(2) + "\n";
}

std::string json_report(const std::vector<period_report>& reports) {
    json j{{"schema", 1}};
    j["periods"] = json::array();
    for (const auto& r : reports) j["periods"].push_back(to_json(r));
    return j.dump(2) + "\n";
}

std::string json_report(const segmentation_report& report) {
    json j{{"schema", 1},
           {"k", report.k},
           {"coverage", report.coverage},
           {"pass", report.pass}};
    j["boundaries"] = json::array();
    for (const auto& b : report.boundaries)
        j["boundaries"].push_back(
            {{"slope", b.slope.str()}, {"offset", b.offset.str()}, {"score", b.score}});
    j["wedges"] = json::array();
    for (const auto& w : report.wedges) {
        json probes = json::array();
        for (const auto& p : w.probes) probes.push_back(to_json(p));
        j["wedges"].push_back(
            {{"wedge", w.wedge.str()}, {"certified", w.certified}, {"probes", probes}});
    }
    return j.dump(2) + "\n";
}

std::string json_report(const percolation_result& result) {
    json j{{"schema", 1},
           {"percolates", result.percolates},
           {"connectivity", result.connectivity},
           {"path_cells", result.path_cells},
           {"frontier", result.frontier}};
    return j.dump(2) + "\n";
}

} // namespace vsg
