#include "vsg/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace vsg {

namespace {

u64 checked_add(u64 a, u64 b) {
    if (a > std::numeric_limits<u64>::max() - b)
        fail(errc::overflow, "coordinate addition overflows 64 bits");
    return a + b;
}

bool all_zero(const move_vector& m) {
    return std::all_of(m.begin(), m.end(), [](u64 c) { return c == 0; });
}

} // namespace

ruleset::ruleset(std::vector<move_vector> moves) {
    if (moves.empty()) fail(errc::bad_argument, "ruleset needs at least one move");
    dim_ = moves.front().size();
    if (dim_ == 0) fail(errc::bad_argument, "moves must have at least one component");
    for (const auto& m : moves) {
        if (m.size() != dim_)
            fail(errc::mixed_dimension, "moves of mixed dimension in one ruleset");
        if (all_zero(m)) fail(errc::zero_move, "the zero vector is not a legal move");
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    moves_ = std::move(moves);
}

u64 ruleset::max_component() const {
    u64 best = 0;
    for (const auto& m : moves_)
        for (u64 c : m) best = std::max(best, c);
    return best;
}

u64 ruleset::max_component(std::size_t axis) const {
    u64 best = 0;
    for (const auto& m : moves_) best = std::max(best, m[axis]);
    return best;
}

ruleset parse_ruleset(const std::string& text) {
    std::vector<move_vector> moves;
    move_vector cur;
    std::string digits;
    bool saw_any = false;

    auto flush_number = [&]() {
        if (digits.empty()) fail(errc::parse, "expected a number in ruleset text");
        u64 value = 0;
        for (char ch : digits) {
            u64 d = static_cast<u64>(ch - '0');
            if (value > (std::numeric_limits<u64>::max() - d) / 10)
                fail(errc::overflow, "component does not fit in 64 bits: " + digits);
            value = value * 10 + d;
        }
        cur.push_back(value);
        digits.clear();
    };
    auto flush_move = [&]() {
        flush_number();
        moves.push_back(cur);
        cur.clear();
    };

    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')') continue;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            saw_any = true;
        } else if (ch == ',') {
            flush_number();
        } else if (ch == ';') {
            flush_move();
        } else {
            fail(errc::parse, std::string("unexpected character '") + ch + "' in ruleset text");
        }
    }
    if (!saw_any) fail(errc::parse, "empty ruleset text");
    flush_move();
    return ruleset(std::move(moves));
}

std::string render_ruleset(const ruleset& rules) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i) out << ';';
        const auto& m = rules.move(i);
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out << ',';
            out << m[j];
        }
    }
    return out.str();
}

ruleset_class classify(const ruleset& rules) {
    ruleset_class cls;
    if (rules.dimension() != 2) return cls;
    const auto& mv = rules.moves();

    auto contains = [&](u64 x, u64 y) {
        return std::find(mv.begin(), mv.end(), move_vector{x, y}) != mv.end();
    };

    cls.symmetric = std::all_of(mv.begin(), mv.end(),
                                [&](const move_vector& m) { return contains(m[1], m[0]); });
    cls.twin = std::all_of(mv.begin(), mv.end(),
                           [&](const move_vector& m) { return m[0] == m[1]; });

    if (mv.size() == 3) {
        // additive: some move is the componentwise sum of the other two
        for (std::size_t k = 0; k < 3 && !cls.additive; ++k) {
            const auto& s = mv[k];
            const auto& u = mv[(k + 1) % 3];
            const auto& v = mv[(k + 2) % 3];
            if (u[0] <= std::numeric_limits<u64>::max() - v[0] &&
                u[1] <= std::numeric_limits<u64>::max() - v[1] && s[0] == u[0] + v[0] &&
                s[1] == u[1] + v[1]) {
                cls.additive = true;
                cls.additive_sum_move = k;
            }
        }
        // asymmetric additive: {(a,b),(c,d),(e,f)} with e=a+c and d=b+f
        for (std::size_t i = 0; i < 3 && !cls.asymmetric_additive; ++i)
            for (std::size_t j = 0; j < 3 && !cls.asymmetric_additive; ++j) {
                if (i == j) continue;
                std::size_t k = 3 - i - j;
                const auto& ab = mv[i];
                const auto& cd = mv[j];
                const auto& ef = mv[k];
                if (ab[0] <= std::numeric_limits<u64>::max() - cd[0] &&
                    ab[1] <= std::numeric_limits<u64>::max() - ef[1] &&
                    ef[0] == ab[0] + cd[0] && cd[1] == ab[1] + ef[1]) {
                    cls.asymmetric_additive = true;
                    cls.asymmetric_sum_move = k;
                }
            }
        // arithmetic additive: {(a,2a),(3a,4a),(4a,6a)} for some a >= 1
        {
            u64 a = mv[0][0];
            if (a >= 1 && a <= std::numeric_limits<u64>::max() / 6 &&
                mv[0] == move_vector{a, 2 * a} && mv[1] == move_vector{3 * a, 4 * a} &&
                mv[2] == move_vector{4 * a, 6 * a})
                cls.arithmetic_additive = true;
        }
        // twin progression: {(a,b),(a+c,b+c),(a+2c,b+2c)}, c >= 1
        {
            const auto& p = mv[0];
            const auto& q = mv[1];
            const auto& r = mv[2];
            if (q[0] > p[0] && q[1] >= p[1] && q[0] - p[0] == q[1] - p[1]) {
                u64 c = q[0] - p[0];
                if (c >= 1 && r[0] == q[0] + c && r[1] == q[1] + c) cls.twin_progression = true;
            }
        }
    }

    // max-symmetric: unique componentwise-maximal top move m with
    // m - s in S for every other move s
    if (mv.size() >= 2) {
        const auto& top = mv.back();
        bool unique_max = true;
        for (std::size_t i = 0; i + 1 < mv.size(); ++i)
            if (mv[i][0] > top[0] || mv[i][1] > top[1]) unique_max = false;
        if (unique_max) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < mv.size() && ok; ++i) {
                u64 rx = top[0] - mv[i][0];
                u64 ry = top[1] - mv[i][1];
                if ((rx == 0 && ry == 0) || !contains(rx, ry)) ok = false;
            }
            cls.max_symmetric = ok;
        }
    }
    return cls;
}

ruleset mirror(const ruleset& rules) {
    if (rules.dimension() != 2) fail(errc::bad_argument, "mirror is defined for dimension 2");
    std::vector<move_vector> out;
    out.reserve(rules.size());
    for (const auto& m : rules.moves()) out.push_back({m[1], m[0]});
    return ruleset(std::move(out));
}

position translate(const position& pos, const ruleset& rules, std::int64_t k) {
    if (rules.size() != 2)
        fail(errc::bad_argument, "translate is defined for two-move rulesets");
    if (pos.size() != rules.dimension())
        fail(errc::shape_mismatch, "position dimension does not match ruleset");
    position out = pos;
    for (std::size_t j = 0; j < out.size(); ++j) {
        u64 step = checked_add(rules.move(0)[j], rules.move(1)[j]);
        if (k >= 0) {
            for (std::int64_t i = 0; i < k; ++i) out[j] = checked_add(out[j], step);
        } else {
            for (std::int64_t i = 0; i < -k; ++i) {
                if (out[j] < step)
                    fail(errc::negative_result, "translation leaves the board");
                out[j] -= step;
            }
        }
    }
    return out;
}

position parse_position(const std::string& text, std::size_t expect_dim) {
    position out;
    std::string digits;
    auto flush = [&]() {
        if (digits.empty()) fail(errc::parse, "expected a number in position text");
        u64 value = 0;
        for (char ch : digits) {
            u64 d = static_cast<u64>(ch - '0');
            if (value > (std::numeric_limits<u64>::max() - d) / 10)
                fail(errc::overflow, "coordinate does not fit in 64 bits: " + digits);
            value = value * 10 + d;
        }
        out.push_back(value);
        digits.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')') continue;
        if (std::isdigit(static_cast<unsigned char>(ch)))
            digits.push_back(ch);
        else if (ch == ',')
            flush();
        else
            fail(errc::parse, std::string("unexpected character '") + ch + "' in position text");
    }
    flush();
    if (expect_dim && out.size() != expect_dim)
        fail(errc::shape_mismatch, "position dimension does not match ruleset");
    return out;
}

} // namespace vsg
