#include "vsg/periodicity.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <optional>

namespace vsg {

namespace {

// Generic certified search over a bit getter on [0, n).
period_report find_period_impl(const std::function<bool(u64)>& bit, u64 n, u64 margin,
                               std::string index) {
    period_report rep;
    rep.index = std::move(index);
    rep.search_bound = n;
    for (u64 T = 1; margin + 2 * T <= n; ++T) {
        // minimal preperiod for this T: one past the last mismatch
        u64 xp = 0;
        for (u64 i = n - T; i-- > 0;) {
            if (bit(i) != bit(i + T)) {
                xp = i + 1;
                break;
            }
        }
        // accept only with enough trailing confirmation
        if (n - xp >= xp + 2 * T + margin) {
            rep.preperiod = xp;
            rep.period = T;
            rep.found = true;
            return rep;
        }
    }
    return rep;
}

} // namespace

period_report find_eventual_period(const outcome_sequence& seq, u64 margin) {
    if (seq.size() < 2) fail(errc::bad_argument, "sequence too short");
    return find_period_impl([&](u64 i) { return seq.p(i); }, seq.size(), margin, "seq");
}

u64 row0_period_bound(u64 A) {
    if (A >= 57) fail(errc::overflow, "A*2^A overflows 64 bits");
    return A << A;
}

std::vector<period_report> row_periods(const outcome_grid& grid, const ruleset& rules,
                                       u64 lo, u64 hi) {
    if (rules.dimension() != 2) fail(errc::shape_mismatch, "row periods need a 2-d ruleset");
    u64 A = rules.max_component(0);
    std::vector<period_report> out;
    for (u64 y = lo; y < hi && y < grid.height(); ++y) {
        period_report rep = find_period_impl([&](u64 x) { return grid.p(x, y); },
                                             grid.width(), A, "row " + std::to_string(y));
        if (y == 0 && rep.found && A > 0 && rep.period > row0_period_bound(A))
            fail(errc::bad_argument, "row 0 period exceeds the A*2^A bound");
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<period_report> column_periods(const outcome_grid& grid, const ruleset& rules,
                                          u64 lo, u64 hi) {
    if (rules.dimension() != 2) fail(errc::shape_mismatch, "column periods need a 2-d ruleset");
    u64 A = rules.max_component(1);
    std::vector<period_report> out;
    for (u64 x = lo; x < hi && x < grid.width(); ++x) {
        period_report rep = find_period_impl([&](u64 y) { return grid.p(x, y); },
                                             grid.height(), A, "col " + std::to_string(x));
        if (x == 0 && rep.found && A > 0 && rep.period > row0_period_bound(A))
            fail(errc::bad_argument, "column 0 period exceeds the A*2^A bound");
        out.push_back(std::move(rep));
    }
    return out;
}

u64 superperiod(const std::vector<u64>& periods, u64 B) {
    if (periods.size() != B) fail(errc::bad_argument, "expected exactly B periods");
    u64 prod = 1;
    for (u64 p : periods) {
        if (p == 0) fail(errc::bad_argument, "periods must be positive");
        if (prod > std::numeric_limits<u64>::max() / p)
            fail(errc::overflow, "superperiod overflows 64 bits");
        prod *= p;
    }
    return prod;
}

line_spec::line_spec(u64 p_, u64 q_, rational m_) : p(p_), q(q_), m(m_) {
    if (p == 0 || q == 0) fail(errc::bad_argument, "line slope must be positive");
    u64 g = std::gcd(p, q);
    p /= g;
    q /= g;
}

std::string line_spec::str() const {
    return std::to_string(p) + "/" + std::to_string(q) + "+" + m.str();
}

period_report line_period(const outcome_grid& grid, const ruleset& rules,
                          const line_spec& line) {
    // lattice points: x with f(x) = px/q + m a nonnegative integer; the
    // solutions form an arithmetic progression with difference q
    auto f_int = [&](u64 x) -> std::optional<u64> {
        // f(x) = (p*x*md + mn*q) / (q*md)
        __int128 num = static_cast<__int128>(line.p) * x * line.m.den +
                       static_cast<__int128>(line.m.num) * line.q;
        __int128 den = static_cast<__int128>(line.q) * line.m.den;
        if (num < 0 || num % den != 0) return std::nullopt;
        return static_cast<u64>(num / den);
    };
    u64 x0 = 0;
    bool have = false;
    for (u64 x = 0; x < grid.width(); ++x)
        if (f_int(x)) {
            x0 = x;
            have = true;
            break;
        }
    std::vector<u64> ys;
    if (have)
        for (u64 x = x0; x < grid.width(); x += line.q) {
            auto y = f_int(x);
            if (!y) break;
            if (*y >= grid.height()) break;
            ys.push_back(*y);
        }
    if (ys.size() < 2) fail(errc::bad_argument, "line has fewer than two lattice points in the grid");

    period_report rep =
        find_period_impl([&](u64 t) { return grid.p(x0 + t * line.q, ys[t]); }, ys.size(),
                         rules.max_component(), "line " + line.str());
    // report in x units
    rep.preperiod = x0 + rep.preperiod * line.q;
    rep.period *= line.q;
    return rep;
}

} // namespace vsg
