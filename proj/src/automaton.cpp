#include "vsg/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace vsg {

std::string segment_spec::str() const {
    std::string s = "{";
    if (lower) s += lower->first.str() + "x+" + lower->second.str() + " < y";
    else s += "y";
    if (upper) s += " < " + upper->first.str() + "x+" + upper->second.str();
    s += "}";
    return s;
}

int coloring_scheme::add_color(const std::string& name) {
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == name) fail(errc::bad_argument, "duplicate color " + name);
    colors.push_back(name);
    return static_cast<int>(colors.size()) - 1;
}

int coloring_scheme::color_id(const std::string& name) const {
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == name) return static_cast<int>(i);
    fail(errc::bad_argument, "unknown color " + name);
}

void coloring_scheme::validate() const {
    auto check = [&](int c) {
        if (c < 0 || c >= static_cast<int>(colors.size()))
            fail(errc::bad_argument, "color id out of range");
    };
    for (const auto& e : inits) check(e.color);
    for (const auto& r : rules) {
        check(r.to);
        for (int c : r.from) check(c);
        if (r.dx == 0 && r.dy == 0)
            fail(errc::bad_argument, "update offsets must not both be zero");
    }
    for (int c : priority) check(c);
}

namespace {

struct proposal {
    std::int16_t color;
    std::uint32_t src;       // source cell index, or UINT32_MAX for an init
    std::int16_t rule;       // rule index, or -1 for an init
};

std::string derivation_str(const coloring_scheme& s, const proposal& p, u64 w) {
    if (p.rule < 0) return "initial " + s.colors[p.color];
    u64 sx = p.src % w, sy = p.src / w;
    const auto& r = s.rules[p.rule];
    return s.colors[p.color] + " from (" + std::to_string(sx) + "," + std::to_string(sy) +
           ") via +" + std::to_string(r.dx) + "," + std::to_string(r.dy);
}

} // namespace

colored_grid run_scheme(const coloring_scheme& scheme, u64 width, u64 height,
                        u64 budget_bytes) {
    scheme.validate();
    if (width == 0 || height == 0) fail(errc::bad_argument, "board dimensions must be positive");
    // proposal bookkeeping is ~tens of bytes per touched cell; gate on the
    // same budget as the packed grids
    if (width * height > budget_bytes / 16) fail(errc::budget_exceeded, "board exceeds budget");

    colored_grid out(width, height);
    std::vector<std::vector<proposal>> props(width * height);
    std::vector<std::vector<std::uint32_t>> diag(width + height - 1);

    std::vector<int> rank(scheme.colors.size(), static_cast<int>(scheme.colors.size()));
    for (std::size_t i = 0; i < scheme.priority.size(); ++i)
        rank[scheme.priority[i]] = static_cast<int>(i);

    auto propose = [&](u64 x, u64 y, proposal pr) {
        if (x >= width || y >= height) return;
        if (!scheme.segment.contains(x, y)) return;
        std::uint32_t idx = static_cast<std::uint32_t>(y * width + x);
        if (props[idx].empty()) diag[x + y].push_back(idx);
        props[idx].push_back(pr);
    };

    for (const auto& e : scheme.inits) {
        u64 x = e.x, y = e.y;
        while (x < width && y < height) {
            propose(x, y, {static_cast<std::int16_t>(e.color), UINT32_MAX, -1});
            if (e.dx == 0 && e.dy == 0) break;
            x += e.dx;
            y += e.dy;
        }
    }

    for (u64 k = 0; k < diag.size(); ++k) {
        for (std::uint32_t idx : diag[k]) {
            auto& list = props[idx];
            u64 x = idx % width, y = idx / width;
            std::int16_t chosen = list.front().color;
            for (const auto& pr : list) {
                if (pr.color == chosen) continue;
                if (scheme.strict) {
                    fail(errc::color_conflict,
                         "cell (" + std::to_string(x) + "," + std::to_string(y) +
                             ") gets two colors: " + derivation_str(scheme, list.front(), width) +
                             " vs " + derivation_str(scheme, pr, width));
                }
                if (rank[pr.color] < rank[chosen]) chosen = pr.color;
            }
            out.set(x, y, chosen);
            for (std::size_t ri = 0; ri < scheme.rules.size(); ++ri) {
                const auto& r = scheme.rules[ri];
                if (std::find(r.from.begin(), r.from.end(), chosen) == r.from.end()) continue;
                propose(x + r.dx, y + r.dy,
                        {static_cast<std::int16_t>(r.to), idx, static_cast<std::int16_t>(ri)});
            }
        }
    }
    return out;
}

verification_report verify_segment(const coloring_scheme& scheme, const outcome_grid& grid) {
    colored_grid colored = run_scheme(scheme, grid.width(), grid.height());
    verification_report rep;
    rep.claim = "colored cells match P-positions on segment " + scheme.segment.str();
    for (u64 y = 0; y < grid.height(); ++y)
        for (u64 x = 0; x < grid.width(); ++x) {
            if (!scheme.segment.contains(x, y)) continue;
            ++rep.cells_checked;
            if (colored.colored(x, y) != grid.p(x, y)) rep.record({x, y});
        }
    return rep;
}

namespace {

rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return rational(std::stoll(tok));
        return rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(errc::parse, "bad rational: " + tok);
    }
}

std::pair<u64, u64> parse_pair(const std::string& tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) fail(errc::parse, "expected x,y in " + tok);
    try {
        return {std::stoull(tok.substr(0, comma)), std::stoull(tok.substr(comma + 1))};
    } catch (const std::exception&) {
        fail(errc::parse, "bad coordinate pair: " + tok);
    }
}

} // namespace

coloring_scheme parse_scheme(const std::string& text) {
    coloring_scheme s;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        const std::string& kw = tok[0];
        if (kw == "color" && tok.size() == 2) {
            s.add_color(tok[1]);
        } else if (kw == "init" && tok.size() >= 4 && tok[2] == "pt") {
            auto [x, y] = parse_pair(tok[3]);
            s.inits.push_back({s.color_id(tok[1]), x, y, 0, 0});
        } else if (kw == "init" && tok.size() >= 5 && tok[2] == "ray") {
            auto [x, y] = parse_pair(tok[3]);
            auto [dx, dy] = parse_pair(tok[4]);
            if (dx != 0 && dy != 0) fail(errc::parse, "rays must be axis-parallel");
            s.inits.push_back({s.color_id(tok[1]), x, y, dx, dy});
        } else if (kw == "rule" && tok.size() == 5 && tok[3] == "->") {
            update_rule r;
            std::istringstream fs(tok[1]);
            std::string name;
            while (std::getline(fs, name, ',')) r.from.push_back(s.color_id(name));
            std::string off = tok[2];
            if (off.empty() || off[0] != '+') fail(errc::parse, "rule offset must start with +");
            auto [dx, dy] = parse_pair(off.substr(1));
            r.dx = dx;
            r.dy = dy;
            r.to = s.color_id(tok[4]);
            s.rules.push_back(std::move(r));
        } else if (kw == "segment" && tok.size() == 5) {
            if (tok[1] != "*" && tok[2] != "*")
                s.segment.lower = {parse_rational(tok[1]), parse_rational(tok[2])};
            if (tok[3] != "*" && tok[4] != "*")
                s.segment.upper = {parse_rational(tok[3]), parse_rational(tok[4])};
        } else if (kw == "policy" && tok.size() >= 2) {
            if (tok[1] == "strict") {
                s.strict = true;
            } else if (tok[1] == "priority") {
                s.strict = false;
                s.priority.clear();
                for (std::size_t i = 2; i < tok.size(); ++i)
                    s.priority.push_back(s.color_id(tok[i]));
            } else {
                fail(errc::parse, "unknown policy " + tok[1]);
            }
        } else {
            fail(errc::parse, "bad scheme line: " + line);
        }
    }
    s.validate();
    return s;
}

builtin_scheme make_asym_os() {
    builtin_scheme b{"asym-os", {}, parse_ruleset("1,2;2,3;3,1"), {}};
    coloring_scheme& s = b.scheme;
    int red = s.add_color("red");
    int green = s.add_color("green");
    int blue = s.add_color("blue");
    int up_a = s.add_color("up-a");
    int up_b = s.add_color("up-b");
    int lower = s.add_color("lower");
    s.inits = {
        {red, 0, 0, 0, 0},  {red, 0, 1, 0, 0},  {red, 0, 2, 0, 0},
        {green, 1, 0, 0, 0}, {green, 1, 1, 0, 0}, {blue, 2, 1, 0, 0},
        {up_a, 0, 3, 0, 1},  // {(0,y) : y >= 3}
        {lower, 2, 0, 1, 0}, // {(x,0) : x >= 2}
    };
    s.rules = {
        {{red}, 5, 4, green},
        {{green}, 3, 5, red},
        {{green, blue}, 5, 4, blue},
        {{up_a}, 4, 4, up_b},
        {{up_b}, 4, 5, up_a},
        {{lower}, 5, 4, lower},
    };
    s.strict = false;
    s.priority = {red, green, blue, up_a, up_b, lower};
    rational g_slope(4, 5), g_off(-4, 5), f_slope(9, 8), f_off(2);
    b.segments = {
        {"lower", {.lower = std::nullopt, .upper = {{g_slope, g_off}}}},
        {"middle", {.lower = {{g_slope, g_off}}, .upper = {{f_slope, f_off}}}},
        {"upper", {.lower = {{f_slope, f_off}}, .upper = std::nullopt}},
    };
    return b;
}

builtin_scheme make_symadd(u64 a, u64 b) {
    if (a == 0 || a >= b) fail(errc::bad_argument, "symadd needs 0 < a < b");
    if (b > 2 * a)
        fail(errc::unsupported_regime, "symadd scheme needs b <= 2a; larger b is unsettled");
    std::string rs = std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(b) +
                     "," + std::to_string(a) + ";" + std::to_string(a + b) + "," +
                     std::to_string(a + b);
    builtin_scheme out{"symadd", {}, parse_ruleset(rs), {}};
    coloring_scheme& s = out.scheme;
    int middle = s.add_color("middle");
    int bottom = s.add_color("bottom");
    int left = s.add_color("left");
    // the box [0,b)^2 is entirely terminal, hence P
    for (u64 x = 0; x < b; ++x)
        for (u64 y = 0; y < b; ++y) s.inits.push_back({middle, x, y, 0, 0});
    for (u64 y = 0; y < a; ++y) s.inits.push_back({bottom, b, y, 1, 0});
    for (u64 x = 0; x < a; ++x) s.inits.push_back({left, x, b, 0, 1});
    u64 r1x = 2 * a + b, r1y = 2 * b + a;   // r1 = (2a+b, 2b+a)
    s.rules = {
        {{middle}, r1x, r1y, middle},
        {{middle}, r1y, r1x, middle},
        {{bottom}, r1y, r1x, bottom},   // lower ray advances by (2b+a, 2a+b)
        {{left}, r1x, r1y, left},
    };
    s.strict = false;
    s.priority = {middle, bottom, left};
    std::int64_t sa = static_cast<std::int64_t>(a), sb = static_cast<std::int64_t>(b);
    rational lo_slope(static_cast<std::int64_t>(r1x), static_cast<std::int64_t>(r1y));
    rational hi_slope(static_cast<std::int64_t>(r1y), static_cast<std::int64_t>(r1x));
    out.segments = {
        {"lower", {.lower = std::nullopt, .upper = {{lo_slope, rational(-sa)}}}},
        {"middle", {.lower = {{lo_slope, rational(-sa)}}, .upper = {{hi_slope, rational(sb)}}}},
        {"upper", {.lower = {{hi_slope, rational(sb)}}, .upper = std::nullopt}},
    };
    return out;
}

builtin_scheme make_arith_add(u64 a) {
    if (a == 0) fail(errc::bad_argument, "arith-add needs a >= 1");
    std::string rs = std::to_string(a) + "," + std::to_string(2 * a) + ";" +
                     std::to_string(3 * a) + "," + std::to_string(4 * a) + ";" +
                     std::to_string(4 * a) + "," + std::to_string(6 * a);
    builtin_scheme out{"arith-add", {}, parse_ruleset(rs), {}};
    coloring_scheme& s = out.scheme;
    int purple = s.add_color("purple");
    int green = s.add_color("green");
    int blue = s.add_color("blue");
    int red = s.add_color("red");
    int yellow = s.add_color("yellow");
    // scaling by a: every unit cell of the a=1 scheme becomes an a-by-a block
    // and the offsets scale by a
    for (u64 r = 0; r < a; ++r)
        for (u64 c = 0; c < a; ++c) {
            s.inits.push_back({purple, c, r, 0, 0});
            s.inits.push_back({purple, c, a + r, 0, 0});
        }
    for (u64 r = 0; r < 2 * a; ++r) s.inits.push_back({blue, a, r, 1, 0});
    for (u64 c = 0; c < a; ++c) s.inits.push_back({red, c, 2 * a, 0, 1});
    s.rules = {
        {{purple}, 2 * a, 4 * a, green},
        {{purple}, 6 * a, 8 * a, blue},
        {{green}, 5 * a, 8 * a, purple},
        {{green}, 6 * a, 8 * a, blue},
        {{blue}, 6 * a, 8 * a, blue},
        {{red}, 2 * a, 4 * a, yellow},
        {{yellow}, 5 * a, 8 * a, red},
    };
    s.strict = false;
    s.priority = {purple, green, blue, red, yellow};
    std::int64_t sa = static_cast<std::int64_t>(a);
    rational lo(4, 3), hi(12, 7);
    out.segments = {
        {"lower", {.lower = std::nullopt, .upper = {{lo, rational(-sa)}}}},
        {"middle", {.lower = {{lo, rational(-sa)}}, .upper = {{hi, rational(2 * sa)}}}},
        {"upper", {.lower = {{hi, rational(2 * sa)}}, .upper = std::nullopt}},
    };
    return out;
}

std::vector<std::string> builtin_names() { return {"asym-os", "symadd:a,b", "arith-add:a"}; }

builtin_scheme builtin_by_name(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "asym-os") return make_asym_os();
    if (name == "symadd") {
        auto comma = params.find(',');
        if (comma == std::string::npos) fail(errc::parse, "symadd needs a,b");
        return make_symadd(std::stoull(params.substr(0, comma)),
                           std::stoull(params.substr(comma + 1)));
    }
    if (name == "arith-add") {
        if (params.empty()) fail(errc::parse, "arith-add needs a");
        return make_arith_add(std::stoull(params));
    }
    fail(errc::bad_argument, "unknown builtin scheme " + name);
}

} // namespace vsg
