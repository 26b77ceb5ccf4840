#include "vsg/grid.hpp"

#include <limits>

namespace vsg {

namespace {

u64 words_for(u64 cells, u64 budget_bytes) {
    u64 words = (cells + 63) / 64;
    if (words > budget_bytes / 8)
        fail(errc::budget_exceeded, "grid of " + std::to_string(cells) +
                                        " cells exceeds the memory budget");
    return words;
}

} // namespace

outcome_grid::outcome_grid(u64 width, u64 height, u64 budget_bytes) : w_(width), h_(height) {
    if (width == 0 || height == 0) fail(errc::bad_argument, "grid dimensions must be positive");
    if (height > std::numeric_limits<u64>::max() / width)
        fail(errc::overflow, "grid cell count overflows 64 bits");
    words_.assign(words_for(width * height, budget_bytes), 0);
}

outcome_sequence::outcome_sequence(u64 n, u64 budget_bytes) : n_(n) {
    if (n == 0) fail(errc::bad_argument, "sequence length must be positive");
    words_.assign(words_for(n, budget_bytes), 0);
}

} // namespace vsg
