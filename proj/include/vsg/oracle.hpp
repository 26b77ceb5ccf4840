#pragma once

#include <string>
#include <vector>

#include "vsg/core.hpp"
#include "vsg/grid.hpp"

namespace vsg {

// Outcome of checking one claim over a grid. Counterexample lists are capped
// at 32 entries. Advisory items are informational and excluded from overall
// pass/fail aggregation.
struct verification_report {
    std::string claim;
    bool pass = true;
    bool advisory = false;
    std::vector<position> counterexamples;
    u64 cells_checked = 0;

    static constexpr std::size_t max_counterexamples = 32;
    void record(position pos) {
        pass = false;
        if (counterexamples.size() < max_counterexamples)
            counterexamples.push_back(std::move(pos));
    }
};

// Ground-truth DP. compute_grid dispatches to the wavefront kernel when
// OpenMP is available; the serial row-major version is kept as the reference.
outcome_grid compute_grid(const ruleset& rules, u64 width, u64 height,
                          u64 budget_bytes = default_budget_bytes);
outcome_grid compute_grid_serial(const ruleset& rules, u64 width, u64 height,
                                 u64 budget_bytes = default_budget_bytes);
outcome_grid compute_grid_wavefront(const ruleset& rules, u64 width, u64 height,
                                    u64 budget_bytes = default_budget_bytes);

outcome_sequence compute_sequence(const ruleset& rules, u64 n,
                                  u64 budget_bytes = default_budget_bytes);

// DP over a d-dimensional box, d <= 6. Bit-packed in row-major index order
// (last coordinate fastest).
class outcome_box {
  public:
    outcome_box(std::vector<u64> bounds, u64 budget_bytes = default_budget_bytes);

    const std::vector<u64>& bounds() const { return bounds_; }
    u64 index(const position& pos) const;
    bool p(const position& pos) const {
        u64 i = index(pos);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set_p(u64 i) { words_[i >> 6] |= u64{1} << (i & 63); }
    bool p_index(u64 i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    u64 cells() const { return cells_; }

  private:
    std::vector<u64> bounds_;
    std::vector<u64> strides_;
    std::vector<u64> words_;
    u64 cells_;
};

outcome_box compute_dd(const ruleset& rules, const std::vector<u64>& bounds,
                       u64 budget_bytes = default_budget_bytes);

// Two-move translation invariance: o(x) = o(x + s1 + s2) wherever both sides
// are in bounds.
verification_report verify_ptop(const outcome_grid& grid, const ruleset& rules);

// Grid-level checks of the three-move update lemmas; the applicable family is
// chosen from classify(rules). The converse check of the additive lemma is
// reported as an advisory item.
std::vector<verification_report> verify_three_move_lemmas(const outcome_grid& grid,
                                                          const ruleset& rules);

// Overall verdict over the non-advisory items.
bool reports_pass(const std::vector<verification_report>& reports);

} // namespace vsg
