#include "subword/occurrence.hpp"

#include "oracles.hpp"

#include "catch_amalgamated.hpp"

#include <cstdint>
#include <random>
#include <vector>

using namespace subword;
using subword::testing::all_subword_counts;
using subword::testing::occ_subset_oracle;
using subword::testing::random_word;

namespace {

Word concat(const Word& a, const Word& b) {
    std::vector<std::uint8_t> letters;
    letters.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        letters.push_back(static_cast<std::uint8_t>(a.letter(i)));
    for (std::size_t i = 0; i < b.size(); ++i)
        letters.push_back(static_cast<std::uint8_t>(b.letter(i)));
    return Word::from_letters(letters);
}

// Subsets of {0..L-1} of size p with at least one element among the first
// len_k positions and at least one among the last len_k2; mirrors the
// inclusion-exclusion term by direct enumeration.
OccCount pinned_placements_oracle(std::size_t L, std::size_t len_k,
                                  std::size_t len_k2, std::size_t p) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << L); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p) continue;
        const std::uint64_t first = mask & ((1ull << len_k) - 1);
        const std::uint64_t last = mask >> (L - len_k2);
        if (first != 0 && last != 0) ++count;
    }
    return OccCount(count);
}

} // namespace

TEST_CASE("worked occurrence counts") {
    // Five occurrences of 01 in 011001.
    CHECK(occ_dp(Word::parse("011001"), Word::parse("01")) == 5);
    CHECK(occ_runs(Word::parse("011001"), Word::parse("01")) == 5);
    // The empty subword occurs exactly once in anything.
    CHECK(occ_dp(Word::parse("0"), Word()) == 1);
    CHECK(occ_dp(Word(), Word()) == 1);
    CHECK(occ_runs(Word::parse("0110"), Word()) == 1);
    // Longer than the host: zero.
    CHECK(occ_dp(Word::parse("01"), Word::parse("011")) == 0);
    CHECK(occ_runs(Word::parse("01"), Word::parse("011")) == 0);
    // A word occurs once in itself.
    CHECK(occ_dp(Word::parse("0110001"), Word::parse("0110001")) == 1);
    CHECK(occ_runs(Word::parse("0110001"), Word::parse("0110001")) == 1);
    // Nonempty subword of the empty word.
    CHECK(occ_dp(Word(), Word::parse("0")) == 0);
    CHECK(occ_runs(Word(), Word::parse("0")) == 0);
}

TEST_CASE("occ in constant words is a binomial coefficient") {
    for (std::size_t n = 0; n <= 40; ++n) {
        const Word w = Word::from_letters(std::vector<std::uint8_t>(n, 0));
        for (std::size_t k = 0; k <= n; ++k) {
            const Word u = Word::from_letters(std::vector<std::uint8_t>(k, 0));
            const OccCount expect = binomial(static_cast<std::int64_t>(n),
                                             static_cast<std::int64_t>(k));
            CHECK(occ_dp(w, u) == expect);
            CHECK(occ_runs(w, u) == expect);
        }
    }
}

TEST_CASE("both routes match the subset oracle exhaustively") {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const Word w : words_of_length(n)) {
            auto counts = all_subword_counts(w);
            for (std::size_t m = 0; m <= n; ++m) {
                for (std::uint64_t code = 0; code < (1ull << m); ++code) {
                    const Word u = Word::from_code(m, code);
                    auto it = counts[m].find(code);
                    const OccCount expect =
                        it == counts[m].end() ? OccCount(0) : it->second;
                    CHECK(occ_dp(w, u) == expect);
                    CHECK(occ_runs(w, u, cache) == expect);
                }
            }
        }
    }
}

TEST_CASE("dp and runs agree exhaustively up to length 9") {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const Word w : words_of_length(n)) {
            for (std::size_t m = 1; m <= n; ++m) {
                for (std::uint64_t code = 0; code < (1ull << m); ++code) {
                    const Word u = Word::from_code(m, code);
                    REQUIRE(occ_dp(w, u) == occ_runs(w, u, cache));
                }
            }
        }
    }
}

TEST_CASE("dp and runs agree on random long pairs") {
    std::mt19937_64 rng(20240811);
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        const std::size_t m = 1 + rng() % n;
        const Word w = random_word(rng, n);
        const Word u = random_word(rng, m);
        REQUIRE(occ_dp(w, u) == occ_runs(w, u, cache));
    }
}

TEST_CASE("pinned run placements match direct enumeration") {
    for (std::size_t L = 1; L <= 12; ++L) {
        for (std::size_t a = 1; a < L; ++a) {
            for (std::size_t b = 1; a + b <= L; ++b) {
                for (std::size_t p = 0; p <= L; ++p) {
                    CHECK(pinned_run_placements(L, a, b, p) ==
                          pinned_placements_oracle(L, a, b, p));
                }
            }
        }
        // Single-run case: every placement inside the run counts.
        for (std::size_t p = 0; p <= L; ++p)
            CHECK(pinned_run_placements(L, L, L, p) ==
                  binomial(static_cast<std::int64_t>(L),
                           static_cast<std::int64_t>(p)));
    }
}

TEST_CASE("occurrence symmetries") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const std::size_t m = 1 + rng() % n;
        const Word w = random_word(rng, n);
        const Word u = random_word(rng, m);
        const OccCount c = occ_dp(w, u);
        CHECK(occ_dp(complement(w), complement(u)) == c);
        CHECK(occ_dp(reverse(w), reverse(u)) == c);
        CHECK(occ_runs(complement(w), complement(u)) == c);
        CHECK(occ_runs(reverse(w), reverse(u)) == c);
    }
}

TEST_CASE("appending letters never removes occurrences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        const Word w = random_word(rng, n);
        const Word u = random_word(rng, 1 + rng() % n);
        const OccCount base = occ_dp(w, u);
        for (std::uint8_t letter = 0; letter <= 1; ++letter) {
            const Word wa = concat(w, Word::from_letters({letter}));
            CHECK(occ_dp(wa, u) >= base);
        }
    }
}

TEST_CASE("concatenation is supermultiplicative") {
    // Each pair of occurrences on the two halves combines to one on the
    // concatenation, so occ(w1 w2, u1 u2) >= occ(w1, u1) occ(w2, u2).
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w1 = random_word(rng, 1 + rng() % 10);
        const Word w2 = random_word(rng, 1 + rng() % 10);
        const Word u1 = random_word(rng, 1 + rng() % w1.size());
        const Word u2 = random_word(rng, 1 + rng() % w2.size());
        CHECK(occ_dp(concat(w1, w2), concat(u1, u2)) >=
              occ_dp(w1, u1) * occ_dp(w2, u2));
    }
}

TEST_CASE("occ is bounded by the binomial row") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        const std::size_t m = 1 + rng() % n;
        const Word w = random_word(rng, n);
        const Word u = random_word(rng, m);
        CHECK(occ_dp(w, u) <= binomial(static_cast<std::int64_t>(n),
                                       static_cast<std::int64_t>(m)));
    }
}

TEST_CASE("cache settings do not change counts") {
    std::mt19937_64 rng(19);
    OccCache off(0, OccCache::Mode::single_thread);
    OccCache deflt(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    OccCache wide(16, OccCache::Mode::shared);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const Word w = random_word(rng, n);
        const Word u = random_word(rng, 1 + rng() % n);
        const OccCount expect = occ_dp(w, u);
        CHECK(occ_runs(w, u, off) == expect);
        CHECK(occ_runs(w, u, deflt) == expect);
        CHECK(occ_runs(w, u, wide) == expect);
    }
    CHECK(off.entries() == 0);
    CHECK(deflt.entries() > 0);
}

TEST_CASE("cache reports hits and misses and clears") {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    const Word w = Word::parse("01100011100110001110");
    const Word u = Word::parse("010011");
    occ_runs(w, u, cache);
    const auto misses = cache.misses();
    CHECK(misses > 0);
    occ_runs(w, u, cache);
    CHECK(cache.hits() > 0);
    cache.clear();
    CHECK(cache.entries() == 0);
    CHECK(cache.hits() == 0);
    // tau is clamped to the key-packing limit.
    OccCache big(100);
    CHECK(big.tau() == OccCache::kMaxTau);
}

TEST_CASE("subset oracle spot check against by-hand counts") {
    // 0110: zeros at indices 0 and 3, ones at 1 and 2. The occurrences of
    // 01 are (0,1) and (0,2); the zero at index 3 has no later one.
    CHECK(occ_subset_oracle(Word::parse("0110"), Word::parse("01")) == 2);
    CHECK(occ_dp(Word::parse("0110"), Word::parse("01")) == 2);
    CHECK(occ_subset_oracle(Word::parse("011001"), Word::parse("01")) == 5);
}
