#pragma once

// Maximal subword occurrences and subword entropy.
//
//   maxocc(w)        = max over subwords u of occ(w, u)
//   entropy          = log2(maxocc)
//
// The candidate scan only generates subwords that start with w's first
// letter and end with w's last letter: some maximizer always does (replace
// a maximizer's first letter by w_1: every occurrence either already
// starts at position 1 or can be extended leftward; symmetrically for the
// last letter), so the restriction never changes the maximum. Candidates
// are enumerated as run tuples, lengths ordered outward from a center near
// 0.4|w| where maximizers empirically live; the order affects only how
// soon a bound is exceeded, never the result.

#include "subword/bigint.hpp"
#include "subword/binomial.hpp"
#include "subword/occurrence.hpp"
#include "subword/word.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace subword {

struct MaxoccResult {
    OccCount maxocc;
    std::vector<Word> witnesses; // sorted by (length, encoding), capped
    double entropy_bits = 0.0;
    std::size_t searched_length_low = 0;
    std::size_t searched_length_high = 0;
    bool heuristic = false; // true when the half-length cap was applied
};

struct MaxoccOptions {
    bool assume_half_length = false;
    std::size_t max_witnesses = 16;
    OccCache* cache = nullptr;            // shared memo; local one if null
    std::optional<std::size_t> center_length; // scan center override
};

namespace detail {

// Lengths 1..hi in the order center, center+1, center-1, center+2, ...
inline std::vector<std::size_t> length_scan_order(std::size_t hi, std::size_t center) {
    if (center < 1) center = 1;
    if (center > hi) center = hi;
    std::vector<std::size_t> order;
    order.reserve(hi);
    order.push_back(center);
    for (std::size_t d = 1; order.size() < hi; ++d) {
        if (center + d <= hi) order.push_back(center + d);
        if (center >= d + 1) order.push_back(center - d);
    }
    return order;
}

struct ScanOutcome {
    bool exceeded = false; // a candidate beat the bound; witness holds it
    Word exceed_witness;
    OccCount best;                 // exact maximum (when not exceeded)
    std::vector<Word> witnesses;   // maximizers, smallest first, capped
    std::size_t len_lo = 0, len_hi = 0;
};

// Core candidate scan over run-tuple subwords of a word given in run form.
// With a bound: exits as soon as some candidate's count exceeds it. With
// need_result: tracks the exact maximum and its witnesses; without it the
// scan only answers the exceedance question.
inline ScanOutcome scan_candidates(const std::vector<std::uint32_t>& w_runs,
                                   int w_first, std::size_t n,
                                   const OccCount* bound, bool need_result,
                                   const MaxoccOptions& opts, OccCache& cache) {
    ScanOutcome out;
    out.best = 0;

    // Candidate run counts: first letter w_1, last letter w_n, so the run
    // count parity is fixed; more runs than w itself can never occur.
    const std::size_t w_run_count = w_runs.size();
    const bool odd_runs = (w_run_count % 2) == 1; // w_1 == w_n exactly then

    std::size_t max_len = opts.assume_half_length ? (n + 1) / 2 : n;
    // The shortest admissible candidate has 1 or 2 letters depending on
    // the parity; never cap below it (matters only for n = 2).
    if (!odd_runs && max_len < 2) max_len = std::min<std::size_t>(2, n);
    out.len_lo = 1;
    out.len_hi = max_len;
    const std::size_t center = opts.center_length
                                   ? *opts.center_length
                                   : static_cast<std::size_t>(0.4 * static_cast<double>(n) + 0.5);

    std::set<Word> winners;
    std::vector<std::uint32_t> comp;
    std::vector<std::size_t> cuts;

    // Evaluates one candidate run tuple; returns true to stop the scan.
    auto consider = [&](const std::vector<std::uint32_t>& cand) {
        OccCount c = occ_runs_raw(w_runs, w_first, cand, w_first, cache);
        if (bound && c > *bound) {
            out.exceeded = true;
            out.exceed_witness = from_runs(RunTuple{w_first, cand});
            return true;
        }
        if (need_result && c >= out.best && c > 0) {
            if (c > out.best) {
                out.best = c;
                winners.clear();
            }
            winners.insert(from_runs(RunTuple{w_first, cand}));
            while (winners.size() > opts.max_witnesses)
                winners.erase(std::prev(winners.end()));
        }
        return false;
    };

    for (std::size_t ell : length_scan_order(max_len, center)) {
        const OccCount row_cap = binomial(static_cast<std::int64_t>(n),
                                          static_cast<std::int64_t>(ell));
        if (need_result) {
            if (row_cap < out.best) continue; // cannot affect max or witnesses
        } else {
            if (bound && row_cap <= *bound) continue; // cannot beat the bound
        }
        const std::size_t j_max = std::min(ell, w_run_count);
        for (std::size_t j = odd_runs ? 1 : 2; j <= j_max; j += 2) {
            if (j == 1) {
                comp.assign(1, static_cast<std::uint32_t>(ell));
                if (consider(comp)) return out;
                continue;
            }
            // Compositions of ell into j parts: cut points
            // cuts[0] < ... < cuts[j-2] in {1..ell-1}, lex order.
            comp.assign(j, 0);
            cuts.resize(j - 1);
            for (std::size_t i = 0; i + 1 < j; ++i) cuts[i] = i + 1;
            while (true) {
                comp[0] = static_cast<std::uint32_t>(cuts[0]);
                for (std::size_t i = 1; i + 1 < j; ++i)
                    comp[i] = static_cast<std::uint32_t>(cuts[i] - cuts[i - 1]);
                comp[j - 1] = static_cast<std::uint32_t>(ell - cuts[j - 2]);
                if (consider(comp)) return out;

                std::size_t i = j - 1;
                while (i > 0 && cuts[i - 1] == ell - 1 - (j - 1 - i)) --i;
                if (i == 0) break;
                ++cuts[i - 1];
                for (std::size_t t = i; t + 1 < j; ++t) cuts[t] = cuts[t - 1] + 1;
            }
        }
    }
    out.witnesses.assign(winners.begin(), winners.end());
    return out;
}

} // namespace detail

inline MaxoccResult maxocc(const Word& w, const MaxoccOptions& opts = {}) {
    if (w.empty())
        throw std::invalid_argument("maxocc: empty word");
    OccCache local(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    OccCache& cache = opts.cache ? *opts.cache : local;
    const RunTuple& rt = w.runs();
    detail::ScanOutcome sc = detail::scan_candidates(rt.runs, rt.first_letter,
                                                     w.size(), nullptr, true,
                                                     opts, cache);
    MaxoccResult res;
    res.maxocc = std::move(sc.best);
    res.witnesses = std::move(sc.witnesses);
    res.entropy_bits = log2_big(res.maxocc);
    res.searched_length_low = sc.len_lo;
    res.searched_length_high = sc.len_hi;
    res.heuristic = opts.assume_half_length;
    return res;
}

// Some u with occ(w, u) > bound, if one exists: hints are tried first,
// then the ordered scan runs with an early exit. An empty return is an
// exact statement that maxocc(w) <= bound.
inline std::optional<Word> maxocc_exceeds(const Word& w, const OccCount& bound,
                                          const std::vector<Word>& hints,
                                          const MaxoccOptions& opts = {}) {
    if (w.empty())
        throw std::invalid_argument("maxocc_exceeds: empty word");
    OccCache local(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    OccCache& cache = opts.cache ? *opts.cache : local;
    const RunTuple& rt = w.runs();
    for (const Word& h : hints) {
        if (h.empty() || h.size() > w.size()) continue;
        const RunTuple& hr = h.runs();
        if (detail::occ_runs_raw(rt.runs, rt.first_letter, hr.runs,
                                 hr.first_letter, cache) > bound)
            return h;
    }
    detail::ScanOutcome sc = detail::scan_candidates(rt.runs, rt.first_letter,
                                                     w.size(), &bound, false,
                                                     opts, cache);
    if (sc.exceeded) return sc.exceed_witness;
    return std::nullopt;
}

inline double subword_entropy(const Word& w) { return maxocc(w).entropy_bits; }

// maxocc(w) <= binom(n, ceil(n/2)) for every word of length n, with
// equality exactly for the constant words.
inline OccCount maxocc_upper_bound(std::size_t n) {
    return binomial(static_cast<std::int64_t>(n),
                    static_cast<std::int64_t>((n + 1) / 2));
}

struct LowerBoundResult {
    BigRational value;    // max over ell of binom(n, ell) k^(-ell), exact
    std::size_t argmax_ell = 0;
    double as_double() const { return to_double(value); }
};

// Averaging bound: the binom(n, ell) occurrences of length-ell subwords
// split among at most k^ell distinct words, so every word of length n has
// some subword occurring at least binom(n, ell) k^(-ell) times; the best
// ell gives a lower bound on maxocc valid for every word of length n.
inline LowerBoundResult maxocc_lower_bound(std::size_t n, unsigned k) {
    if (n < 1 || k < 2)
        throw std::invalid_argument("maxocc_lower_bound: need n >= 1, k >= 2");
    LowerBoundResult best;
    best.value = 0;
    OccCount kpow = 1;
    for (std::size_t ell = 0; ell <= n; ++ell) {
        BigRational term(binomial(static_cast<std::int64_t>(n),
                                  static_cast<std::int64_t>(ell)),
                         kpow);
        if (term > best.value) {
            best.value = term;
            best.argmax_ell = ell;
        }
        kpow *= k;
    }
    return best;
}

} // namespace subword
