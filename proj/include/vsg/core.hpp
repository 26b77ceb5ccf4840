#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsg/error.hpp"

namespace vsg {

using u64 = std::uint64_t;

// One of {P, N}. P means the previous player wins (terminal positions are P).
enum class outcome : unsigned char { P = 1, N = 0 };

inline char outcome_char(outcome o) { return o == outcome::P ? 'P' : 'N'; }

// A d-tuple of nonnegative coordinates.
using position = std::vector<u64>;

// A move vector: nonnegative components, not all zero.
using move_vector = std::vector<u64>;

// A finite subtraction set: deduplicated moves in lexicographic order, all of
// the same dimension, none zero. Immutable after construction.
class ruleset {
  public:
    ruleset(std::vector<move_vector> moves);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return moves_.size(); }
    const std::vector<move_vector>& moves() const { return moves_; }
    const move_vector& move(std::size_t i) const { return moves_[i]; }

    u64 max_component() const;            // max over all moves and coordinates
    u64 max_component(std::size_t axis) const;

    friend bool operator==(const ruleset& a, const ruleset& b) { return a.moves_ == b.moves_; }

  private:
    std::size_t dim_;
    std::vector<move_vector> moves_;
};

// Classification flags for two-dimensional rulesets (all false when the
// dimension or the move count does not fit the definition).
struct ruleset_class {
    bool symmetric = false;
    bool twin = false;
    bool additive = false;
    bool asymmetric_additive = false;
    bool arithmetic_additive = false;
    bool twin_progression = false;
    bool max_symmetric = false;
    // For the additive variants: index of the move acting as the sum.
    std::optional<std::size_t> additive_sum_move;
    std::optional<std::size_t> asymmetric_sum_move;
};

// Grammar: moves separated by ';', components by ','; whitespace and
// parentheses are ignored. "2,1; 1,3" and "(2,1);(1,3)" are both fine.
ruleset parse_ruleset(const std::string& text);

// Canonical text form, e.g. "1,3;2,1" (sorted moves, no spaces).
std::string render_ruleset(const ruleset& rules);

ruleset_class classify(const ruleset& rules);

// Coordinate-swapped ruleset; dimension must be 2.
ruleset mirror(const ruleset& rules);

// pos + k*(s1+s2) for a two-move ruleset; k may be negative as long as the
// result stays in the quadrant.
position translate(const position& pos, const ruleset& rules, std::int64_t k);

position parse_position(const std::string& text, std::size_t expect_dim = 0);

} // namespace vsg
