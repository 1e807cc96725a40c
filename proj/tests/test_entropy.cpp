#include "subword/entropy.hpp"

#include "oracles.hpp"

#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

using namespace subword;
using subword::testing::brute_maxocc;
using subword::testing::random_word;

namespace {

// Brute maximizers restricted to the first/last-letter filter the library
// applies to reported witnesses.
std::set<Word> filtered_maximizers(const Word& w,
                                   const std::set<Word>& maximizers) {
    std::set<Word> out;
    for (const Word& u : maximizers)
        if (u.first() == w.first() && u.last() == w.last()) out.insert(u);
    return out;
}

} // namespace

TEST_CASE("maxocc matches brute force exhaustively") {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    MaxoccOptions opts;
    opts.cache = &cache;
    opts.max_witnesses = 1u << 20; // uncapped for set comparison
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const Word w : words_of_length(n)) {
            const auto brute = brute_maxocc(w);
            const MaxoccResult got = maxocc(w, opts);
            REQUIRE(got.maxocc == brute.value);
            const std::set<Word> expect = filtered_maximizers(w, brute.maximizers);
            const std::set<Word> have(got.witnesses.begin(), got.witnesses.end());
            REQUIRE(have == expect);
            // A maximizer matching first and last letters always exists.
            REQUIRE(!have.empty());
            CHECK(!got.heuristic);
            CHECK(got.searched_length_low == 1);
            CHECK(got.searched_length_high == n);
        }
    }
}

TEST_CASE("maxocc matches brute force on longer samples") {
    std::mt19937_64 rng(20240812);
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    MaxoccOptions opts;
    opts.cache = &cache;
    for (std::size_t n : {11, 12, 13, 14}) {
        for (int trial = 0; trial < 8; ++trial) {
            const Word w = random_word(rng, n);
            CHECK(maxocc(w, opts).maxocc == brute_maxocc(w).value);
        }
    }
}

TEST_CASE("published maxocc values") {
    CHECK(maxocc(Word::parse("0")).maxocc == 1);
    CHECK(maxocc(Word::parse("01")).maxocc == 1);
    CHECK(maxocc(Word::parse("001")).maxocc == 2);
    CHECK(maxocc(Word::parse("0110")).maxocc == 2);
    CHECK(maxocc(Word::parse("01110")).maxocc == 3);
    CHECK(maxocc(Word::parse("011001")).maxocc == 5);
    CHECK(maxocc(Word::parse("0110001")).maxocc == 6);
    CHECK(maxocc(Word::parse("01110001")).maxocc == 9);
    CHECK(maxocc(Word::parse("011000110")).maxocc == 16);
    CHECK(maxocc(Word::parse("0110001110")).maxocc == 22);
}

TEST_CASE("subword entropy values") {
    CHECK(subword_entropy(Word::parse("011000110")) == 4.0);
    CHECK(subword_entropy(Word::parse("0")) == 0.0);
    CHECK(subword_entropy(Word::parse("0110001110")) ==
          Catch::Approx(std::log2(22.0)).epsilon(1e-12));
}

TEST_CASE("witnesses reproduce the count and include the published ones") {
    {
        const MaxoccResult r = maxocc(Word::parse("0110001110"));
        const std::set<Word> wit(r.witnesses.begin(), r.witnesses.end());
        CHECK(wit.count(Word::parse("0110")) == 1);
        for (const Word& u : r.witnesses)
            CHECK(occ_dp(Word::parse("0110001110"), u) == r.maxocc);
    }
    {
        const MaxoccResult r = maxocc(Word::parse("011001"));
        const std::set<Word> wit(r.witnesses.begin(), r.witnesses.end());
        CHECK(wit.count(Word::parse("01")) == 1);
    }
    {
        const MaxoccResult r = maxocc(Word::parse("01110"));
        const std::set<Word> wit(r.witnesses.begin(), r.witnesses.end());
        CHECK(wit == std::set<Word>{Word::parse("010"), Word::parse("0110")});
    }
}

TEST_CASE("witness list is sorted and capped") {
    MaxoccOptions opts;
    opts.max_witnesses = 2;
    const MaxoccResult r = maxocc(Word::parse("01110"), opts);
    REQUIRE(r.witnesses.size() <= 2);
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    // The cap keeps the smallest winners.
    CHECK(r.witnesses.front() == Word::parse("010"));
}

TEST_CASE("maxocc is symmetry invariant exhaustively") {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    MaxoccOptions opts;
    opts.cache = &cache;
    opts.max_witnesses = 1;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const Word w : words_of_length(n)) {
            const OccCount base = maxocc(w, opts).maxocc;
            REQUIRE(maxocc(complement(w), opts).maxocc == base);
            REQUIRE(maxocc(reverse(w), opts).maxocc == base);
        }
    }
}

TEST_CASE("empty word is rejected") {
    CHECK_THROWS_AS(maxocc(Word()), std::invalid_argument);
    CHECK_THROWS_AS(maxocc_exceeds(Word(), OccCount(1), {}),
                    std::invalid_argument);
}

TEST_CASE("half-length cap is flagged and never overcounts") {
    MaxoccOptions half;
    half.assume_half_length = true;
    CHECK(maxocc(Word::parse("01"), half).maxocc == 1);
    CHECK(maxocc(Word::parse("0"), half).maxocc == 1);
    const MaxoccResult r = maxocc(Word::parse("0110001110"), half);
    CHECK(r.heuristic);
    CHECK(r.searched_length_high == 5);
    CHECK(r.maxocc == 22); // witness 0110 fits under the cap here
    CHECK_FALSE(maxocc(Word::parse("0110001110")).heuristic);
    // The cap is a heuristic: it can undercount. 011110 is the smallest
    // example; its sole admissible maximizer 0110 is longer than 3.
    CHECK(maxocc(Word::parse("011110"), half).maxocc == 4);
    CHECK(maxocc(Word::parse("011110")).maxocc == 6);
    // It never overcounts: the candidate set only shrinks.
    std::mt19937_64 rng(23);
    MaxoccOptions full;
    for (int trial = 0; trial < 40; ++trial) {
        const Word w = random_word(rng, 4 + rng() % 11);
        CHECK(maxocc(w, half).maxocc <= maxocc(w, full).maxocc);
    }
}

TEST_CASE("scan center override changes nothing but the order") {
    const Word w = Word::parse("01100011100101");
    const OccCount expect = maxocc(w).maxocc;
    for (std::size_t center : {1u, 3u, 7u, 14u}) {
        MaxoccOptions opts;
        opts.center_length = center;
        const MaxoccResult r = maxocc(w, opts);
        CHECK(r.maxocc == expect);
        CHECK(r.witnesses == maxocc(w).witnesses);
    }
}

TEST_CASE("length scan order is a centered permutation") {
    const auto order = detail::length_scan_order(10, 4);
    CHECK(order.size() == 10);
    CHECK(order.front() == 4);
    std::set<std::size_t> seen(order.begin(), order.end());
    CHECK(seen.size() == 10);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 10);
    // Center is clamped into range.
    CHECK(detail::length_scan_order(5, 99).front() == 5);
    CHECK(detail::length_scan_order(5, 0).front() == 1);
}

TEST_CASE("maxocc_exceeds examples") {
    // binom(6,3) = 20 > 5 inside the constant word.
    const auto wit = maxocc_exceeds(Word::parse("000000"), OccCount(5), {});
    REQUIRE(wit.has_value());
    CHECK(occ_dp(Word::parse("000000"), *wit) > 5);

    // maxocc(011001) = 5, so nothing exceeds 5.
    CHECK(!maxocc_exceeds(Word::parse("011001"), OccCount(5),
                          {Word::parse("01")})
               .has_value());

    // With bound 4 the hint 01 itself is a witness.
    const auto hinted = maxocc_exceeds(Word::parse("011001"), OccCount(4),
                                       {Word::parse("01")});
    REQUIRE(hinted.has_value());
    CHECK(*hinted == Word::parse("01"));
}

TEST_CASE("maxocc_exceeds is exact") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 120; ++trial) {
        const Word w = random_word(rng, 1 + rng() % 12);
        const OccCount mx = brute_maxocc(w).value;
        // One below: must find a witness. At the value: must not.
        if (mx > 0) {
            const auto wit = maxocc_exceeds(w, mx - 1, {});
            REQUIRE(wit.has_value());
            CHECK(occ_dp(w, *wit) == mx);
        }
        CHECK(!maxocc_exceeds(w, mx, {}).has_value());
        // Hints that are too long or empty are ignored, not fatal.
        std::vector<Word> hints{Word(), random_word(rng, w.size() + 3)};
        CHECK(!maxocc_exceeds(w, mx, hints).has_value());
    }
}

TEST_CASE("bound examples") {
    CHECK(maxocc_upper_bound(4) == 6);
    CHECK(maxocc_upper_bound(1) == 1);
    CHECK(maxocc_upper_bound(14) == 3432);

    const LowerBoundResult l6 = maxocc_lower_bound(6, 2);
    CHECK(l6.value == BigRational(15, 4)); // 3.75 at ell = 2
    CHECK(l6.argmax_ell == 2);
    CHECK(l6.as_double() == Catch::Approx(3.75));

    const LowerBoundResult l24 = maxocc_lower_bound(24, 2);
    CHECK(l24.value == BigRational(735471, 256));
    CHECK(l24.argmax_ell == 8);

    CHECK_THROWS_AS(maxocc_lower_bound(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(maxocc_lower_bound(5, 1), std::invalid_argument);
}

TEST_CASE("bounds sandwich maxocc") {
    std::mt19937_64 rng(31);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (std::size_t n = 1; n <= 16; ++n) {
        const LowerBoundResult lb = maxocc_lower_bound(n, 2);
        const OccCount lb_ceil =
            (numerator(lb.value) + denominator(lb.value) - 1) /
            denominator(lb.value);
        const OccCount ub = maxocc_upper_bound(n);
        for (int trial = 0; trial < 12; ++trial) {
            const Word w = random_word(rng, n);
            const OccCount mx = maxocc(w).maxocc;
            CHECK(mx >= lb_ceil);
            CHECK(mx <= ub);
        }
        // The constant word attains the upper bound.
        const Word zeros = Word::from_letters(std::vector<std::uint8_t>(n, 0));
        CHECK(maxocc(zeros).maxocc == ub);
    }
}
