#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "vsg/core.hpp"

namespace vsg {

// Default cap on grid allocations: 2 GiB of packed bits.
inline constexpr u64 default_budget_bytes = u64{2} << 30;

// Bit-packed P/N matrix over the box [0,W) x [0,H); bit = 1 means P.
class outcome_grid {
  public:
    outcome_grid(u64 width, u64 height, u64 budget_bytes = default_budget_bytes);

    u64 width() const { return w_; }
    u64 height() const { return h_; }

    bool p(u64 x, u64 y) const {
        u64 i = y * w_ + x;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    outcome at(u64 x, u64 y) const { return p(x, y) ? outcome::P : outcome::N; }

    void set_p(u64 x, u64 y) {
        u64 i = y * w_ + x;
        words_[i >> 6] |= u64{1} << (i & 63);
    }
    // Thread-safe variant for the wavefront kernel (distinct threads may
    // touch the same word on a shared anti-diagonal).
    void set_p_atomic(u64 x, u64 y) {
        u64 i = y * w_ + x;
        std::atomic_ref<u64>(words_[i >> 6]).fetch_or(u64{1} << (i & 63),
                                                      std::memory_order_relaxed);
    }
    void clear(u64 x, u64 y) {
        u64 i = y * w_ + x;
        words_[i >> 6] &= ~(u64{1} << (i & 63));
    }

    const std::vector<u64>& words() const { return words_; }
    std::vector<u64>& words() { return words_; }

    friend bool operator==(const outcome_grid& a, const outcome_grid& b) {
        return a.w_ == b.w_ && a.h_ == b.h_ && a.words_ == b.words_;
    }

  private:
    u64 w_, h_;
    std::vector<u64> words_;
};

// 1-d outcome vector o(0..n-1), same packing.
class outcome_sequence {
  public:
    explicit outcome_sequence(u64 n, u64 budget_bytes = default_budget_bytes);

    u64 size() const { return n_; }
    bool p(u64 x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
    outcome at(u64 x) const { return p(x) ? outcome::P : outcome::N; }
    void set_p(u64 x) { words_[x >> 6] |= u64{1} << (x & 63); }

    friend bool operator==(const outcome_sequence& a, const outcome_sequence& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

  private:
    u64 n_;
    std::vector<u64> words_;
};

} // namespace vsg
