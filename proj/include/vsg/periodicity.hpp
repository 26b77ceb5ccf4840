#pragma once

#include <string>
#include <vector>

#include "vsg/core.hpp"
#include "vsg/grid.hpp"
#include "vsg/rational.hpp"

namespace vsg {

// Certified eventual period of a bit sequence. A candidate (T, x') is only
// accepted when the whole available suffix agrees and the window leaves at
// least x' + 2T + margin cells of confirmation; minimality is lexicographic
// in (T, x').
struct period_report {
    std::string index;       // row/column id or line spec
    u64 preperiod = 0;       // x'
    u64 period = 1;          // T
    bool found = false;
    u64 search_bound = 0;    // length of the examined window
};

// Line y = (p/q)x + m with p,q > 0, gcd(p,q) = 1.
struct line_spec {
    u64 p = 1;
    u64 q = 1;
    rational m;

    line_spec() = default;
    line_spec(u64 p_, u64 q_, rational m_);
    std::string str() const;
};

period_report find_eventual_period(const outcome_sequence& seq, u64 margin);

// Per-row reports over rows [lo, hi); the certification margin is the
// ruleset's maximal x-component. Row 0's period is checked against the
// theoretical bound A*2^A.
std::vector<period_report> row_periods(const outcome_grid& grid, const ruleset& rules,
                                       u64 lo, u64 hi);
std::vector<period_report> column_periods(const outcome_grid& grid, const ruleset& rules,
                                          u64 lo, u64 hi);

// Product of the B row periods below a target row.
u64 superperiod(const std::vector<u64>& periods, u64 B);

// Eventual period of the outcomes along the lattice points of a line; the
// reported period is a multiple of q and the preperiod is an x coordinate.
period_report line_period(const outcome_grid& grid, const ruleset& rules,
                          const line_spec& line);

// Theoretical row-0 period bound A*2^A.
u64 row0_period_bound(u64 A);

} // namespace vsg
