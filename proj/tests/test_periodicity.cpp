#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vsg/oracle.hpp"
#include "vsg/periodicity.hpp"

using namespace vsg;

TEST_CASE("find_eventual_period on the 1-d reference sequences") {
    outcome_sequence s257 = compute_sequence(parse_ruleset("2;5;7"), 200);
    period_report r = find_eventual_period(s257, 7);
    CHECK(r.found);
    CHECK(r.preperiod == 0);
    CHECK(r.period == 22);

    outcome_sequence s58 = compute_sequence(parse_ruleset("5;8"), 200);
    period_report r2 = find_eventual_period(s58, 8);
    CHECK(r2.found);
    CHECK(r2.preperiod == 0);
    CHECK(r2.period == 13);
}

TEST_CASE("find_eventual_period on an all-P sequence") {
    outcome_sequence s(64);
    for (u64 i = 0; i < 64; ++i) s.set_p(i);
    period_report r = find_eventual_period(s, 1);
    CHECK(r.found);
    CHECK(r.preperiod == 0);
    CHECK(r.period == 1);
}

TEST_CASE("found reports re-verify by direct scan") {
    outcome_sequence s = compute_sequence(parse_ruleset("2;5;7"), 300);
    period_report r = find_eventual_period(s, 7);
    REQUIRE(r.found);
    for (u64 i = r.preperiod; i + r.period < s.size(); ++i)
        REQUIRE(s.p(i) == s.p(i + r.period));
}

TEST_CASE("uncertifiable window yields found=false") {
    // an aperiodic-looking prefix too short to certify anything
    outcome_sequence s(8);
    s.set_p(0);
    s.set_p(3);
    s.set_p(4);
    period_report r = find_eventual_period(s, 100);
    CHECK(!r.found);
}

TEST_CASE("row_periods basics") {
    ruleset crow = parse_ruleset("2,1;1,3");
    outcome_grid g = compute_grid(crow, 256, 8);
    auto reps = row_periods(g, crow, 0, 8);
    REQUIRE(reps.size() == 8);
    // no move has y-component 0, so row 0 is all P
    CHECK(reps[0].found);
    CHECK(reps[0].preperiod == 0);
    CHECK(reps[0].period == 1);
    for (const auto& r : reps) CHECK(r.found);
}

TEST_CASE("row 0 projects to the 1-d game of the horizontal moves") {
    ruleset r = parse_ruleset("1,0;2,4");
    outcome_grid g = compute_grid(r, 256, 8);
    auto reps = row_periods(g, r, 0, 1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].found);
    CHECK(reps[0].preperiod == 0);
    CHECK(reps[0].period == 2);
    CHECK(reps[0].period <= row0_period_bound(2));
}

TEST_CASE("column_periods mirror row_periods") {
    ruleset r = parse_ruleset("1,2;3,1");
    outcome_grid g = compute_grid(r, 128, 128);
    outcome_grid gm = compute_grid(mirror(r), 128, 128);
    auto cols = column_periods(g, r, 0, 10);
    auto rows = row_periods(gm, mirror(r), 0, 10);
    REQUIRE(cols.size() == rows.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        CHECK(cols[i].found == rows[i].found);
        CHECK(cols[i].period == rows[i].period);
        CHECK(cols[i].preperiod == rows[i].preperiod);
    }
}

TEST_CASE("column 0 of a vertical-move game is the 1-d game") {
    ruleset r = parse_ruleset("0,1;2,4");
    outcome_grid g = compute_grid(r, 8, 256);
    auto reps = column_periods(g, r, 0, 1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].found);
    CHECK(reps[0].preperiod == 0);
    CHECK(reps[0].period == 2);
}

TEST_CASE("superperiod") {
    CHECK(superperiod({2, 3}, 2) == 6);
    CHECK(superperiod({1, 1, 1}, 3) == 1);
    CHECK(superperiod({22}, 1) == 22);
    CHECK_THROWS_AS(superperiod({2, 3}, 3), error);
    CHECK_THROWS_AS(superperiod(std::vector<u64>(8, u64{1} << 62), 8), error);
}

TEST_CASE("row0_period_bound") {
    CHECK(row0_period_bound(1) == 2);
    CHECK(row0_period_bound(2) == 8);
    CHECK(row0_period_bound(5) == 160);
}

TEST_CASE("line_period on the diagonal of {(1,1)}") {
    ruleset r = parse_ruleset("1,1");
    outcome_grid g = compute_grid(r, 128, 128);
    period_report rep = line_period(g, r, line_spec(1, 1, rational(0)));
    CHECK(rep.found);
    CHECK(rep.preperiod == 0);
    CHECK(rep.period == 2);
}

TEST_CASE("line_period on the diagonal of {(0,2)}") {
    ruleset r = parse_ruleset("0,2");
    outcome_grid g = compute_grid(r, 128, 128);
    period_report rep = line_period(g, r, line_spec(1, 1, rational(0)));
    CHECK(rep.found);
    CHECK(rep.preperiod == 0);
    CHECK(rep.period == 4);
}

TEST_CASE("line_period period is a multiple of q on an all-P grid") {
    ruleset r = parse_ruleset("1,1");   // only sets the certification margin here
    outcome_grid g(40, 40);
    for (u64 y = 0; y < 40; ++y)
        for (u64 x = 0; x < 40; ++x) g.set_p(x, y);
    period_report rep = line_period(g, r, line_spec(2, 3, rational(0)));
    CHECK(rep.found);
    CHECK(rep.period == 3);
    CHECK(rep.preperiod == 0);
}

TEST_CASE("line_spec validation and rendering") {
    CHECK_THROWS_AS(line_spec(0, 1, rational(0)), error);
    CHECK_THROWS_AS(line_spec(1, 0, rational(0)), error);
    line_spec l(9, 8, rational(2));
    CHECK(l.str() == "9/8+2");
}
