#pragma once

#include <string>
#include <vector>

#include "vsg/automaton.hpp"
#include "vsg/core.hpp"
#include "vsg/grid.hpp"
#include "vsg/periodicity.hpp"
#include "vsg/rational.hpp"

namespace vsg {

struct boundary_candidate {
    rational slope;
    rational offset;
    double score = 0.0;   // P-density contrast between the flanking bands
};

// Scan reduced slopes p/q with p,q <= max_pq and a lattice of offsets; score
// each line by the P-density contrast of two bands of thickness (p+q) on
// either side. Lines must cross at least half the board's columns; the
// strongest offset per slope is kept. Returns candidates above the threshold,
// best first.
std::vector<boundary_candidate> estimate_boundaries(const outcome_grid& grid,
                                                    u64 max_pq = 20,
                                                    double threshold = 0.02);

struct wedge_summary {
    segment_spec wedge;
    std::vector<period_report> probes;
    bool certified = false;
};

struct segmentation_report {
    std::vector<boundary_candidate> boundaries;
    std::size_t k = 0;             // number of wedges
    double coverage = 0.0;
    std::vector<wedge_summary> wedges;
    bool pass = false;
};

// Split the quadrant along the given boundaries (sorted by slope) and certify
// line-periodicity along a bundle of interior lattice lines per wedge.
segmentation_report verify_segmentation(const outcome_grid& grid, const ruleset& rules,
                                        const std::vector<boundary_candidate>& lines);

struct percolation_result {
    bool percolates = false;
    int connectivity = 4;
    u64 path_cells = 0;      // cells reached by the flood
    position frontier;       // deepest cell reached
};

// Desk-scale N-percolation proxy: does a connected path of N-cells inside the
// segment span the middle 80% of the board along increasing x+y?
percolation_result n_percolates(const outcome_grid& grid, const segment_spec& segment,
                                int connectivity);

} // namespace vsg
