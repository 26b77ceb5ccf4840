#pragma once

#include <functional>

#include "vsg/core.hpp"
#include "vsg/rational.hpp"

namespace vsg {

// One-move ruleset {(a,b)}: the P-set is the union of L-shapes
// L_n = {(x,y): 2na <= x < (2n+1)a, y >= 2nb} u {(x,y): x >= 2na, 2nb <= y < (2n+1)b}.
struct l_shape_family {
    u64 a, b;
    bool contains(u64 x, u64 y) const;
};

// Canonical view of a two-move 2-d ruleset {(a,b),(c,d)} with a <= c after an
// optional mirror, plus the exact slope delta = (b+d)/(a+c).
struct two_move_geometry {
    u64 a, b, c, d;
    bool mirrored = false;   // true when the stored labels are coordinate-swapped
    rational delta;

    explicit two_move_geometry(const ruleset& rules);
};

outcome solve_one_move_1d(u64 a, u64 x);
outcome solve_one_move_2d(u64 a, u64 b, u64 x, u64 y);
outcome solve_two_move_1d(u64 a, u64 b, u64 x);

// Requires b/2 <= a < b; otherwise UnsupportedRegime (caller falls back to
// the oracle).
outcome solve_additive_three_1d(u64 a, u64 b, u64 x);

outcome twin_lift(const std::function<outcome(u64)>& solve1d, u64 x, u64 y);

// Whether P({(a,a),(b,b)}) is unchanged by adjoining (a,b) and (b,a).
bool symmetric_expansion_holds(u64 a, u64 b);

// Constant-memory decision procedures, O(bit-length) per query.
outcome solve_two_move_2d(const ruleset& rules, u64 x, u64 y);
outcome solve_two_move_dd(const ruleset& rules, const position& pos);

} // namespace vsg
