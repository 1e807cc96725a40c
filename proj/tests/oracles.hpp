#pragma once

// Independent reference implementations used only by the tests. They avoid
// the library's counting routes on purpose: occurrences are enumerated by
// brute force over position subsets, so a bug shared by the dynamic
// program and the run-length recursion cannot hide here.

#include "subword/bigint.hpp"
#include "subword/word.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace subword::testing {

// occ(w, u) by enumerating every position subset of w of size |u|.
inline OccCount occ_subset_oracle(const Word& w, const Word& u) {
    const std::size_t n = w.size(), m = u.size();
    if (n > 20)
        throw std::invalid_argument("occ_subset_oracle: word too long");
    if (m > n) return OccCount(0);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
        bool match = true;
        std::size_t j = 0;
        for (std::size_t i = 0; i < n && match; ++i) {
            if (mask >> i & 1u) {
                if (w.letter(i) != u.letter(j)) match = false;
                ++j;
            }
        }
        if (match) ++count;
    }
    return OccCount(count);
}

// Counts of every subword of w at once: result[len][code] = occ(w, u).
inline std::vector<std::map<std::uint64_t, OccCount>>
all_subword_counts(const Word& w) {
    const std::size_t n = w.size();
    if (n > 20)
        throw std::invalid_argument("all_subword_counts: word too long");
    std::vector<std::map<std::uint64_t, OccCount>> counts(n + 1);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::uint64_t code = 0;
        std::size_t len = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> (n - 1 - i) & 1u) { // keep most-significant-first order
                code = (code << 1) | static_cast<std::uint64_t>(w.letter(i));
                ++len;
            }
        }
        counts[len][code] += 1;
    }
    return counts;
}

struct BruteMaxocc {
    OccCount value;
    std::set<Word> maximizers; // every maximizer, unfiltered
};

inline BruteMaxocc brute_maxocc(const Word& w) {
    auto counts = all_subword_counts(w);
    BruteMaxocc out;
    out.value = 0;
    for (std::size_t len = 1; len <= w.size(); ++len)
        for (const auto& [code, c] : counts[len])
            if (c > out.value) out.value = c;
    for (std::size_t len = 1; len <= w.size(); ++len)
        for (const auto& [code, c] : counts[len])
            if (c == out.value)
                out.maximizers.insert(Word::from_code(len, code));
    return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = static_cast<std::uint8_t>(rng() & 1u);
    return Word::from_letters(letters);
}

} // namespace subword::testing
