#include "vsg/closed_form.hpp"

#include <limits>

namespace vsg {

namespace {

outcome po(bool p) { return p ? outcome::P : outcome::N; }

u64 checked_add(u64 a, u64 b) {
    if (a > std::numeric_limits<u64>::max() - b)
        fail(errc::overflow, "coordinate addition overflows 64 bits");
    return a + b;
}

} // namespace

bool l_shape_family::contains(u64 x, u64 y) const {
    if (a == 0 && b == 0) fail(errc::bad_argument, "one-move ruleset needs a nonzero move");
    // degenerate moves collapse the L-shapes to parallel strips
    if (a == 0) return y % (2 * b) < b;
    if (b == 0) return x % (2 * a) < a;
    if (x / a % 2 == 0 && y >= (x / (2 * a)) * 2 * b) return true;   // vertical arm
    if (y / b % 2 == 0 && x >= (y / (2 * b)) * 2 * a) return true;   // horizontal arm
    return false;
}

two_move_geometry::two_move_geometry(const ruleset& rules) {
    if (rules.size() != 2 || rules.dimension() != 2)
        fail(errc::shape_mismatch, "geometry needs a two-move 2-d ruleset");
    u64 x0 = rules.move(0)[0], y0 = rules.move(0)[1];
    u64 x1 = rules.move(1)[0], y1 = rules.move(1)[1];
    mirrored = x0 == 0 || x1 == 0;
    if (mirrored) {
        std::swap(x0, y0);
        std::swap(x1, y1);
    }
    if (x0 <= x1) {
        a = x0; b = y0; c = x1; d = y1;
    } else {
        a = x1; b = y1; c = x0; d = y0;
    }
    delta = rational(static_cast<std::int64_t>(checked_add(b, d)),
                     static_cast<std::int64_t>(checked_add(a, c)));
}

outcome solve_one_move_1d(u64 a, u64 x) {
    if (a == 0) fail(errc::bad_argument, "move must be positive");
    return po(x % (2 * a) < a);
}

outcome solve_one_move_2d(u64 a, u64 b, u64 x, u64 y) {
    return po(l_shape_family{a, b}.contains(x, y));
}

outcome solve_two_move_1d(u64 a, u64 b, u64 x) {
    if (a == 0 || a >= b) fail(errc::bad_argument, "need 0 < a < b");
    u64 r = x % (a + b);
    if (r >= b) return outcome::N;
    return solve_one_move_1d(a, r);
}

outcome solve_additive_three_1d(u64 a, u64 b, u64 x) {
    if (a == 0 || a >= b) fail(errc::bad_argument, "need 0 < a < b");
    if (b > 2 * a)
        fail(errc::unsupported_regime,
             "pure period 2a+b needs b/2 <= a; fall back to the oracle");
    return po(x % (2 * a + b) < a);
}

outcome twin_lift(const std::function<outcome(u64)>& solve1d, u64 x, u64 y) {
    return solve1d(x <= y ? x : y);
}

bool symmetric_expansion_holds(u64 a, u64 b) {
    if (a == 0 || a >= b) fail(errc::bad_argument, "need 0 < a < b");
    return b <= 2 * a;
}

namespace {

// General two-move position above (or on) the line y = delta * x: translate
// down by k*(a+c, b+d), then read the base strip x' in [0, a+c). There the
// outcome is the one-move game {(a,b)} unless x' falls in region C with the
// horizontal arm exhausted.
outcome solve_upper(u64 a, u64 b, u64 c, u64 d, u64 x, u64 y) {
    u64 tx = a + c, ty = b + d;
    u64 k = x / tx;
    u64 xr = x - k * tx;
    u64 yr = y - k * ty;   // y - delta*x is invariant, so yr >= delta*xr >= 0
    if (xr < c || yr < d) return po(l_shape_family{a, b}.contains(xr, yr));
    // x' in [c, a+c), y' >= d: the move (c,d) lands in the all-P column x < a.
    return outcome::N;
}

} // namespace

outcome solve_two_move_2d(const ruleset& rules, u64 x, u64 y) {
    if (rules.size() != 2 || rules.dimension() != 2)
        fail(errc::shape_mismatch, "solver needs a two-move 2-d ruleset");
    u64 a0 = rules.move(0)[0], b0 = rules.move(0)[1];
    u64 a1 = rules.move(1)[0], b1 = rules.move(1)[1];

    // degenerate zero patterns reduce to one-dimensional structure
    if (a0 == 0 && a1 == 0) {
        u64 lo = std::min(b0, b1), hi = std::max(b0, b1);
        return solve_two_move_1d(lo, hi, y);
    }
    if (b0 == 0 && b1 == 0) {
        u64 lo = std::min(a0, a1), hi = std::max(a0, a1);
        return solve_two_move_1d(lo, hi, x);
    }
    if ((a0 == 0 && b1 == 0) || (a1 == 0 && b0 == 0)) {
        u64 p = a0 == 0 ? b0 : b1;   // vertical move (0,p)
        u64 q = a0 == 0 ? a1 : a0;   // horizontal move (q,0)
        return po((x % (2 * q) < q) == (y % (2 * p) < p));
    }
    two_move_geometry geo(rules);
    if (geo.mirrored) std::swap(x, y);
    u64 tx = checked_add(geo.a, geo.c);
    u64 ty = checked_add(geo.b, geo.d);
    // exact test y >= delta*x via cross multiplication in 128 bits
    bool upper = static_cast<unsigned __int128>(y) * tx >=
                 static_cast<unsigned __int128>(x) * ty;
    if (upper) return solve_upper(geo.a, geo.b, geo.c, geo.d, x, y);
    // Strictly below the line. If a y-component is zero, translate into the
    // strip y' < b+d, where only the horizontal move remains playable and the
    // game is one-dimensional in x.
    if (geo.b == 0 || geo.d == 0) {
        u64 k = y / ty;
        u64 xr = x - k * tx;   // below the line, x*ty > y*tx >= k*ty*tx forces x >= k*tx
        u64 h = geo.b == 0 ? geo.a : geo.c;
        return solve_one_move_1d(h, xr);
    }
    // otherwise the mirrored position is strictly above the mirrored line
    if (geo.b <= geo.d) return solve_upper(geo.b, geo.a, geo.d, geo.c, y, x);
    return solve_upper(geo.d, geo.c, geo.b, geo.a, y, x);
}

outcome solve_two_move_dd(const ruleset& rules, const position& pos) {
    if (rules.size() != 2) fail(errc::shape_mismatch, "solver needs exactly two moves");
    if (pos.size() != rules.dimension())
        fail(errc::shape_mismatch, "position dimension does not match ruleset");
    const auto& s1 = rules.move(0);
    const auto& s2 = rules.move(1);
    std::size_t d = pos.size();

    // translate to the smallest representative x' = x - k(s1+s2), x' >= 0
    u64 k = std::numeric_limits<u64>::max();
    for (std::size_t j = 0; j < d; ++j) {
        u64 t = checked_add(s1[j], s2[j]);
        if (t > 0) k = std::min(k, pos[j] / t);
    }
    position xp(d);
    for (std::size_t j = 0; j < d; ++j) xp[j] = pos[j] - k * (s1[j] + s2[j]);

    // from x', repeated play of a single move i survives k_i rounds
    auto chain = [&](const move_vector& s) {
        u64 ki = std::numeric_limits<u64>::max();
        for (std::size_t j = 0; j < d; ++j)
            if (s[j] > 0) ki = std::min(ki, xp[j] / s[j]);
        return ki;
    };
    u64 k1 = chain(s1);
    u64 k2 = chain(s2);
    return k1 % 2 == 0 && k2 % 2 == 0 ? outcome::P : outcome::N;
}

} // namespace vsg
