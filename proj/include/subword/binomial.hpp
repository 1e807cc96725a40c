#pragma once

// Binomial coefficients over exact integers. Small rows come from a cached
// Pascal triangle that grows on demand and can be read concurrently (rows
// are published through an atomic watermark and never modified afterwards);
// large arguments fall back to the multiplicative formula.

#include "subword/bigint.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <vector>

namespace subword {

namespace detail {

class BinomialTable {
public:
    static constexpr std::int64_t kMaxRow = 512;

    const OccCount& at(std::int64_t n, std::int64_t k) {
        const std::size_t row = static_cast<std::size_t>(n);
        if (rows_ready_.load(std::memory_order_acquire) <= row) grow(row);
        return rows_[row][static_cast<std::size_t>(k)];
    }

private:
    // Each slot is filled exactly once, before the watermark passes it, and
    // is never touched again; readers below the watermark need no lock.
    void grow(std::size_t upto) {
        std::lock_guard<std::mutex> lock(grow_mutex_);
        std::size_t ready = rows_ready_.load(std::memory_order_relaxed);
        while (ready <= upto) {
            std::vector<OccCount> row(ready + 1);
            row.front() = 1;
            row.back() = 1;
            for (std::size_t k = 1; k < ready; ++k)
                row[k] = rows_[ready - 1][k - 1] + rows_[ready - 1][k];
            rows_[ready] = std::move(row);
            ++ready;
            rows_ready_.store(ready, std::memory_order_release);
        }
    }

    std::array<std::vector<OccCount>, kMaxRow + 1> rows_;
    std::atomic<std::size_t> rows_ready_{0};
    std::mutex grow_mutex_;
};

inline BinomialTable& binomial_table() {
    static BinomialTable table;
    return table;
}

} // namespace detail

// binom(n, k); zero outside 0 <= k <= n, and zero for negative n so that
// inclusion-exclusion sums can call it without guards.
inline OccCount binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return OccCount(0);
    if (n <= detail::BinomialTable::kMaxRow)
        return detail::binomial_table().at(n, k);
    if (k > n - k) k = n - k;
    OccCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact: result is binom(n-k+i, i) after this step
    }
    return result;
}

} // namespace subword
