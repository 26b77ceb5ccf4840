#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixture_data.hpp"
#include "vsg/automaton.hpp"
#include "vsg/oracle.hpp"

using namespace vsg;

namespace {

std::set<fx::cell> cells_of_color(const colored_grid& g, int color) {
    std::set<fx::cell> out;
    for (u64 y = 0; y < g.height(); ++y)
        for (u64 x = 0; x < g.width(); ++x)
            if (g.at(x, y) == color) out.insert({x, y});
    return out;
}

std::set<fx::cell> as_set(const std::vector<fx::cell>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("segment_spec membership is exact") {
    segment_spec s;
    s.lower = {{rational(4, 5), rational(-4, 5)}, };
    s.upper = {{rational(9, 8), rational(2)}};
    CHECK(s.contains(5, 4));        // 4/5*5 - 4/5 = 3.2 < 4 < 9/8*5+2 = 7.625
    CHECK(!s.contains(5, 3));       // 3 < 3.2 fails the lower bound
    CHECK(!s.contains(8, 11));      // 11 = 9/8*8+2 exactly: boundary is excluded
    segment_spec all;
    CHECK(all.contains(0, 0));
}

TEST_CASE("empty initial set yields an empty coloring") {
    coloring_scheme s;
    s.add_color("only");
    colored_grid g = run_scheme(s, 8, 8);
    for (u64 y = 0; y < 8; ++y)
        for (u64 x = 0; x < 8; ++x) CHECK(!g.colored(x, y));
}

TEST_CASE("single point and rule propagate along the offset") {
    coloring_scheme s;
    int c = s.add_color("c");
    s.inits = {{c, 1, 0, 0, 0}};
    s.rules = {{{c}, 2, 3, c}};
    colored_grid g = run_scheme(s, 12, 12);
    CHECK(cells_of_color(g, c) == std::set<fx::cell>{{1, 0}, {3, 3}, {5, 6}, {7, 9}});
}

TEST_CASE("strict policy reports conflicts with both derivations") {
    coloring_scheme s;
    int a = s.add_color("a");
    int b = s.add_color("b");
    s.inits = {{a, 0, 0, 0, 0}, {b, 1, 0, 0, 0}};
    s.rules = {{{a}, 2, 2, a}, {{b}, 1, 2, b}};   // both color (2,2)
    try {
        run_scheme(s, 8, 8);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::color_conflict);
        std::string what = e.what();
        CHECK(what.find("(2,2)") != std::string::npos);
        CHECK(what.find("a") != std::string::npos);
        CHECK(what.find("b") != std::string::npos);
    }
}

TEST_CASE("priority policy resolves the same conflict") {
    coloring_scheme s;
    int a = s.add_color("a");
    int b = s.add_color("b");
    s.inits = {{a, 0, 0, 0, 0}, {b, 1, 0, 0, 0}};
    s.rules = {{{a}, 2, 2, a}, {{b}, 1, 2, b}};
    s.strict = false;
    s.priority = {b, a};
    colored_grid g = run_scheme(s, 8, 8);
    CHECK(g.at(2, 2) == b);
}

TEST_CASE("scheme text format round-trips through the engine") {
    const char* text =
        "# tiny demo\n"
        "color fg\n"
        "color bg\n"
        "init fg pt 0,0\n"
        "init bg ray 3,0 1,0\n"
        "rule fg +1,2 -> fg\n"
        "segment * * 2 1\n"
        "policy priority fg bg\n";
    coloring_scheme s = parse_scheme(text);
    CHECK(s.colors.size() == 2);
    CHECK(!s.strict);
    REQUIRE(s.segment.upper.has_value());
    colored_grid g = run_scheme(s, 8, 8);
    CHECK(g.at(0, 0) == 0);
    CHECK(g.at(1, 2) == 0);   // inside the segment: 2 < 2*1+1
    CHECK(g.at(2, 4) == 0);
    CHECK(g.at(3, 6) == 0);
    CHECK(g.at(4, 0) == 1);   // the bg ray
    CHECK(!g.colored(2, 0));  // ray starts at x = 3
}

TEST_CASE("parse_scheme rejects malformed input") {
    CHECK_THROWS_AS(parse_scheme("color a\ninit a pt x,y\n"), error);
    CHECK_THROWS_AS(parse_scheme("bogus line\n"), error);
    CHECK_THROWS_AS(parse_scheme("color a\nrule a 1,2 -> a\n"), error);
    CHECK_THROWS_AS(parse_scheme("color a\ninit a ray 0,0 1,1\n"), error);
}

TEST_CASE("asym-os builtin reproduces the reference coloring") {
    builtin_scheme b = make_asym_os();
    colored_grid g = run_scheme(b.scheme, 23, 21);
    CHECK(cells_of_color(g, b.scheme.color_id("red")) == as_set(fx::red_os));
    CHECK(cells_of_color(g, b.scheme.color_id("green")) == as_set(fx::green_os));
    CHECK(cells_of_color(g, b.scheme.color_id("blue")) == as_set(fx::blue_os));
}

TEST_CASE("asym-os generation 1: red maps to green via (5,4)") {
    builtin_scheme b = make_asym_os();
    colored_grid g = run_scheme(b.scheme, 8, 8);
    int green = b.scheme.color_id("green");
    CHECK(g.at(5, 4) == green);
    CHECK(g.at(5, 5) == green);
    CHECK(g.at(5, 6) == green);
}

TEST_CASE("asym-os verify_segment passes against the oracle") {
    builtin_scheme b = make_asym_os();
    outcome_grid g = compute_grid(b.rules, 23, 21);
    verification_report rep = verify_segment(b.scheme, g);
    CHECK(rep.pass);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("symadd(1,2) builtin matches the reference figure") {
    builtin_scheme b = make_symadd(1, 2);
    CHECK(render_ruleset(b.rules) == "1,2;2,1;3,3");
    colored_grid g = run_scheme(b.scheme, 26, 26);
    std::set<fx::cell> colored;
    for (u64 y = 0; y < 26; ++y)
        for (u64 x = 0; x < 26; ++x)
            if (g.colored(x, y)) colored.insert({x, y});
    CHECK(colored == as_set(fx::p_symadd12_26));
    // the initial middle block is the full [0,2)^2 box
    int middle = b.scheme.color_id("middle");
    CHECK(g.at(0, 0) == middle);
    CHECK(g.at(1, 0) == middle);
    CHECK(g.at(0, 1) == middle);
    CHECK(g.at(1, 1) == middle);
}

TEST_CASE("symadd regime guard") {
    CHECK_THROWS_AS(make_symadd(1, 5), error);
    try {
        make_symadd(1, 5);
    } catch (const error& e) {
        CHECK(e.code() == errc::unsupported_regime);
    }
    CHECK_THROWS_AS(make_symadd(0, 2), error);
    CHECK_THROWS_AS(make_symadd(3, 3), error);
}

TEST_CASE("symadd verify_segment passes for several parameters") {
    for (auto [a, b] : std::vector<std::pair<u64, u64>>{{1, 2}, {2, 3}, {3, 4}}) {
        builtin_scheme bs = make_symadd(a, b);
        u64 n = 20 * (a + b);
        outcome_grid g = compute_grid(bs.rules, n, n);
        verification_report rep = verify_segment(bs.scheme, g);
        INFO("symadd(", a, ",", b, ")");
        CHECK(rep.pass);
    }
}

TEST_CASE("arith-add(1) builtin matches the reference figure") {
    builtin_scheme b = make_arith_add(1);
    CHECK(render_ruleset(b.rules) == "1,2;3,4;4,6");
    colored_grid g = run_scheme(b.scheme, 50, 50);
    CHECK(cells_of_color(g, b.scheme.color_id("purple")) == as_set(fx::purple_arith1));
    CHECK(cells_of_color(g, b.scheme.color_id("green")) == as_set(fx::green_arith1));
    // the reference figure draws only the middle-segment blue cells; the
    // scheme also colors the lower rays blue
    auto blue = cells_of_color(g, b.scheme.color_id("blue"));
    for (const auto& c : fx::blue_arith1) {
        INFO("blue cell ", c.first, ",", c.second);
        CHECK(blue.count(c) == 1);
    }
    verification_report rep = verify_segment(b.scheme, compute_grid(b.rules, 50, 50));
    CHECK(rep.pass);
}

TEST_CASE("builtin_by_name dispatch") {
    CHECK(builtin_by_name("asym-os").name == "asym-os");
    CHECK(builtin_by_name("symadd:2,3").rules == parse_ruleset("2,3;3,2;5,5"));
    CHECK(builtin_by_name("arith-add:2").rules == parse_ruleset("2,4;6,8;8,12"));
    CHECK_THROWS_AS(builtin_by_name("nope"), error);
    CHECK(builtin_names().size() == 3);
}

TEST_CASE("monotone restriction: larger boards agree on the small window") {
    builtin_scheme b = make_asym_os();
    colored_grid small = run_scheme(b.scheme, 23, 21);
    colored_grid big = run_scheme(b.scheme, 92, 84);
    for (u64 y = 0; y < 21; ++y)
        for (u64 x = 0; x < 23; ++x) REQUIRE(small.at(x, y) == big.at(x, y));
}
