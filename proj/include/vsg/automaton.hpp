#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsg/core.hpp"
#include "vsg/grid.hpp"
#include "vsg/oracle.hpp"
#include "vsg/rational.hpp"

namespace vsg {

// Open wedge {(x,y) : alpha*x + k < y < beta*x + m}; either bound may be
// absent. Membership tests are exact integer cross-multiplications.
struct segment_spec {
    std::optional<std::pair<rational, rational>> lower;   // (alpha, k): y > alpha*x + k
    std::optional<std::pair<rational, rational>> upper;   // (beta, m):  y < beta*x + m

    bool contains(u64 x, u64 y) const {
        auto sx = static_cast<std::int64_t>(x);
        auto sy = static_cast<std::int64_t>(y);
        if (lower && !above_line(sx, sy, lower->first, lower->second)) return false;
        if (upper && !below_line(sx, sy, upper->first, upper->second)) return false;
        return true;
    }
    std::string str() const;
};

// (x0 + t*dx, y0 + t*dy) for t >= 0; a point when dx = dy = 0.
struct init_entry {
    int color;
    u64 x, y;
    u64 dx = 0, dy = 0;
};

struct update_rule {
    std::vector<int> from;
    u64 dx, dy;   // not both zero
    int to;
};

struct coloring_scheme {
    std::vector<std::string> colors;
    std::vector<init_entry> inits;
    std::vector<update_rule> rules;
    segment_spec segment;
    bool strict = true;
    std::vector<int> priority;   // highest first; used when !strict

    int add_color(const std::string& name);
    int color_id(const std::string& name) const;
    void validate() const;
};

// Per-cell color ids; -1 = uncolored.
class colored_grid {
  public:
    colored_grid(u64 width, u64 height) : w_(width), h_(height), cells_(width * height, -1) {}
    u64 width() const { return w_; }
    u64 height() const { return h_; }
    std::int16_t at(u64 x, u64 y) const { return cells_[y * w_ + x]; }
    void set(u64 x, u64 y, std::int16_t c) { cells_[y * w_ + x] = c; }
    bool colored(u64 x, u64 y) const { return at(x, y) >= 0; }

  private:
    u64 w_, h_;
    std::vector<std::int16_t> cells_;
};

// Least fixpoint of rule application from the initial sets, restricted to the
// scheme's segment and the board. Deterministic: offsets strictly increase
// x+y, so cells are finalized in anti-diagonal order.
colored_grid run_scheme(const coloring_scheme& scheme, u64 width, u64 height,
                        u64 budget_bytes = default_budget_bytes);

// Within segment and bounds: colored <=> P.
verification_report verify_segment(const coloring_scheme& scheme, const outcome_grid& grid);

// Line-oriented scheme text format:
//   color <name>
//   init <name> pt x,y | ray x,y dx,dy
//   rule <from,...> +dx,dy -> <to>
//   segment <alpha> <k> <beta> <m>      (use * for an absent bound)
//   policy strict | priority <names...>
coloring_scheme parse_scheme(const std::string& text);

struct builtin_scheme {
    std::string name;
    coloring_scheme scheme;
    ruleset rules;
    // named wedges for the segmentation analyses (lower/middle/upper)
    std::vector<std::pair<std::string, segment_spec>> segments;
};

// Catalog constructors; `spec` is "asym-os", "symadd:a,b" or "arith-add:a".
builtin_scheme make_asym_os();
builtin_scheme make_symadd(u64 a, u64 b);
builtin_scheme make_arith_add(u64 a);
builtin_scheme builtin_by_name(const std::string& spec);
std::vector<std::string> builtin_names();

} // namespace vsg
