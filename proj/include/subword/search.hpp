#pragma once

// Minimal subword entropy at a fixed length: exhaustive search over all
// words of length n starting with 0 (letter symmetry makes the other half
// redundant), plus heuristic tools for longer lengths.
//
// The exhaustive search keeps a shared monotone bound (current minimum).
// Each word first faces the cached hint subwords (the previous word's most
// frequent subword and its reverse); a hint occurring more than bound
// times rules the word out immediately. Survivors get a full candidate
// scan that exits early the moment any candidate beats the bound. The
// final minimum, achiever set, and witnesses are independent of worker
// count and scheduling.

#include "subword/bigint.hpp"
#include "subword/entropy.hpp"
#include "subword/occurrence.hpp"
#include "subword/word.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace subword {

struct SearchStats {
    std::uint64_t words_scanned = 0;     // reached the full candidate scan
    std::uint64_t words_pruned_by_hints = 0;
    std::uint64_t chunks_completed = 0;
    double wall_seconds = 0.0;
};

struct SearchResult {
    std::size_t n = 0;
    OccCount min_maxocc;
    double min_entropy_bits = 0.0;
    std::vector<Word> achievers;              // distinct symmetry-class reps
    std::vector<std::vector<Word>> witnesses; // per achiever
    SearchStats stats;
    bool complete = true; // false when cancelled or chunk-limited

    // Semantic equality used by the determinism tests; stats and timing
    // are intentionally excluded.
    bool same_outcome(const SearchResult& o) const {
        return n == o.n && min_maxocc == o.min_maxocc &&
               achievers == o.achievers && witnesses == o.witnesses &&
               complete == o.complete;
    }
};

struct SearchOptions {
    unsigned workers = 1;
    bool hint_pruning = true;
    std::string checkpoint_path;           // empty: no checkpointing
    bool resume = false;                   // load checkpoint_path first
    std::size_t chunk_size = 1 << 10;      // words per work unit
    std::size_t checkpoint_every = 8;      // chunks between checkpoint writes
    unsigned tau = OccCache::kDefaultTau;
    std::size_t max_witnesses = 16;
    std::size_t max_n = 28;                // guard against runaway requests
    std::uint64_t stop_after_chunks = 0;   // 0 = unlimited; else abort early
    std::atomic<bool>* cancel = nullptr;   // external cancellation flag
};

// Persistent snapshot of a partially completed search: the code ranges
// already processed, the best bound so far, and the words achieving it.
struct Checkpoint {
    static constexpr int kVersion = 1;
    std::size_t n = 0;
    bool bound_set = false;
    OccCount bound;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges; // half-open
    std::vector<Word> achievers;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["version"] = kVersion;
        j["n"] = n;
        j["bound"] = bound_set ? to_decimal(bound) : "";
        nlohmann::json r = nlohmann::json::array();
        for (const auto& [lo, hi] : ranges) r.push_back({lo, hi});
        j["ranges"] = std::move(r);
        nlohmann::json a = nlohmann::json::array();
        for (const Word& w : achievers) a.push_back(w.str());
        j["achievers"] = std::move(a);
        return j;
    }

    static Checkpoint from_json(const nlohmann::json& j) {
        if (!j.contains("version") || j["version"].get<int>() != kVersion)
            throw std::runtime_error("checkpoint: unsupported version");
        Checkpoint c;
        c.n = j.at("n").get<std::size_t>();
        const std::string b = j.at("bound").get<std::string>();
        if (!b.empty()) {
            c.bound = parse_decimal(b);
            c.bound_set = true;
        }
        for (const auto& r : j.at("ranges"))
            c.ranges.emplace_back(r.at(0).get<std::uint64_t>(),
                                  r.at(1).get<std::uint64_t>());
        for (const auto& a : j.at("achievers"))
            c.achievers.push_back(Word::parse(a.get<std::string>()));
        return c;
    }

    void save(const std::string& path) const {
        const std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw std::runtime_error("checkpoint: cannot write " + tmp);
            out << to_json().dump(2) << '\n';
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw std::runtime_error("checkpoint: cannot replace " + path);
    }

    static Checkpoint load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("checkpoint: cannot read " + path);
        nlohmann::json j;
        in >> j;
        return from_json(j);
    }
};

namespace detail {

// Builds the run-length form of the length-n word with the given dense
// code (which always starts with 0 here, so the first letter is 0).
inline void runs_from_code(std::size_t n, std::uint64_t code,
                           std::vector<std::uint32_t>& out) {
    out.clear();
    std::uint32_t len = 1;
    int prev = static_cast<int>((code >> (n - 1)) & 1u);
    for (std::size_t i = 1; i < n; ++i) {
        const int b = static_cast<int>((code >> (n - 1 - i)) & 1u);
        if (b == prev) {
            ++len;
        } else {
            out.push_back(len);
            len = 1;
            prev = b;
        }
    }
    out.push_back(len);
}

// Merges a half-open range into a sorted disjoint range list, absorbing
// neighbours that touch or overlap.
inline void merge_range(std::vector<std::pair<std::uint64_t, std::uint64_t>>& rs,
                        std::uint64_t lo, std::uint64_t hi) {
    auto it = std::lower_bound(
        rs.begin(), rs.end(), lo,
        [](const auto& r, std::uint64_t v) { return r.first < v; });
    it = rs.insert(it, {lo, hi});
    if (it != rs.begin() && std::prev(it)->second >= it->first) {
        auto p = std::prev(it);
        p->second = std::max(p->second, it->second);
        it = rs.erase(it);
        it = p;
    }
    while (std::next(it) != rs.end() && it->second >= std::next(it)->first) {
        it->second = std::max(it->second, std::next(it)->second);
        rs.erase(std::next(it));
    }
}

} // namespace detail

inline SearchResult min_entropy_exhaustive(std::size_t n,
                                           const SearchOptions& opts = {}) {
    if (n < 1)
        throw std::invalid_argument("min_entropy_exhaustive: n must be >= 1");
    if (n > opts.max_n)
        throw std::invalid_argument("min_entropy_exhaustive: n exceeds limit");
    if (n > 63)
        throw std::invalid_argument("min_entropy_exhaustive: n exceeds 63");

    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = n == 1 ? 1 : (1ull << (n - 1));

    // Shared state: exact bound + achiever codes behind a mutex, and a
    // saturating 64-bit snapshot of the bound for cheap reads.
    std::mutex state_mu;
    bool bound_set = false;
    OccCount bound_exact;
    std::set<std::uint64_t> achiever_codes;
    std::atomic<std::uint64_t> bound_snapshot{UINT64_MAX};
    auto snapshot_of = [](const OccCount& b) {
        return b <= UINT64_MAX ? b.convert_to<std::uint64_t>() : UINT64_MAX;
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> done_ranges;
    if (opts.resume && !opts.checkpoint_path.empty()) {
        Checkpoint c = Checkpoint::load(opts.checkpoint_path);
        if (c.n != n)
            throw std::runtime_error("checkpoint: length mismatch");
        if (c.bound_set) {
            bound_set = true;
            bound_exact = c.bound;
            bound_snapshot.store(snapshot_of(bound_exact));
        }
        for (const Word& w : c.achievers) achiever_codes.insert(w.code());
        done_ranges = c.ranges;
    }

    // Pending work: the complement of the completed ranges.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pending;
    {
        std::uint64_t pos = 0;
        for (const auto& [lo, hi] : done_ranges) {
            if (pos < lo) pending.emplace_back(pos, lo);
            pos = std::max(pos, hi);
        }
        if (pos < total) pending.emplace_back(pos, total);
    }

    std::mutex work_mu;
    std::size_t pending_idx = 0;
    std::uint64_t pending_pos = pending.empty() ? 0 : pending[0].first;
    std::uint64_t chunks_given = 0;
    bool stopped = false; // chunk budget exhausted or cancelled

    auto grab_chunk = [&](std::uint64_t& lo, std::uint64_t& hi) {
        std::lock_guard<std::mutex> lock(work_mu);
        if (stopped) return false;
        if (opts.stop_after_chunks && chunks_given >= opts.stop_after_chunks) {
            stopped = true;
            return false;
        }
        while (pending_idx < pending.size() &&
               pending_pos >= pending[pending_idx].second) {
            ++pending_idx;
            if (pending_idx < pending.size())
                pending_pos = pending[pending_idx].first;
        }
        if (pending_idx >= pending.size()) return false;
        lo = pending_pos;
        hi = std::min(pending[pending_idx].second, lo + opts.chunk_size);
        pending_pos = hi;
        ++chunks_given;
        return true;
    };

    const unsigned workers = std::max(1u, opts.workers);
    OccCache cache(opts.tau, workers == 1 ? OccCache::Mode::single_thread
                                          : OccCache::Mode::shared);

    std::atomic<std::uint64_t> scanned{0}, pruned{0}, chunks_done{0};
    std::mutex ckpt_mu;

    auto write_checkpoint = [&]() {
        if (opts.checkpoint_path.empty()) return;
        Checkpoint c;
        c.n = n;
        {
            std::lock_guard<std::mutex> lock(state_mu);
            c.bound_set = bound_set;
            if (bound_set) c.bound = bound_exact;
            for (std::uint64_t code : achiever_codes)
                c.achievers.push_back(Word::from_code(n, code));
        }
        {
            std::lock_guard<std::mutex> lock(work_mu);
            c.ranges = done_ranges;
        }
        std::lock_guard<std::mutex> lock(ckpt_mu);
        c.save(opts.checkpoint_path);
    };

    auto worker = [&]() {
        std::vector<std::uint32_t> w_runs;
        std::vector<Word> hints;
        MaxoccOptions scan_opts;
        scan_opts.max_witnesses = opts.max_witnesses;
        std::uint64_t lo, hi;
        while (grab_chunk(lo, hi)) {
            bool chunk_complete = true;
            for (std::uint64_t code = lo; code < hi; ++code) {
                if (opts.cancel &&
                    opts.cancel->load(std::memory_order_relaxed)) {
                    std::lock_guard<std::mutex> lock(work_mu);
                    stopped = true;
                    chunk_complete = false;
                    if (code > lo) detail::merge_range(done_ranges, lo, code);
                    break;
                }
                detail::runs_from_code(n, code, w_runs);

                const std::uint64_t snap =
                    bound_snapshot.load(std::memory_order_relaxed);
                const bool have_bound = snap != UINT64_MAX;
                OccCount local_bound;
                if (have_bound) local_bound = snap;

                // Level 1: hints. They prove strict exceedance only, so a
                // word tying the bound always reaches the full scan.
                if (have_bound && opts.hint_pruning && !hints.empty()) {
                    bool ruled_out = false;
                    for (const Word& h : hints) {
                        const RunTuple& hr = h.runs();
                        if (detail::occ_runs_raw(w_runs, 0, hr.runs,
                                                 hr.first_letter, cache) >
                            local_bound) {
                            ruled_out = true;
                            break;
                        }
                    }
                    if (ruled_out) {
                        pruned.fetch_add(1, std::memory_order_relaxed);
                        continue;
                    }
                }

                // Level 2: full scan, recentered on the hint length.
                scan_opts.center_length =
                    hints.empty() ? std::nullopt
                                  : std::make_optional(hints.front().size());
                detail::ScanOutcome sc = detail::scan_candidates(
                    w_runs, 0, n, have_bound ? &local_bound : nullptr, true,
                    scan_opts, cache);
                scanned.fetch_add(1, std::memory_order_relaxed);

                if (sc.exceeded) {
                    hints.assign({sc.exceed_witness, reverse(sc.exceed_witness)});
                    continue;
                }
                // Completed scan: sc.best is the exact maxocc of this word.
                if (!sc.witnesses.empty())
                    hints.assign(
                        {sc.witnesses.front(), reverse(sc.witnesses.front())});
                std::lock_guard<std::mutex> lock(state_mu);
                if (!bound_set || sc.best < bound_exact) {
                    bound_set = true;
                    bound_exact = sc.best;
                    achiever_codes.clear();
                    achiever_codes.insert(code);
                    bound_snapshot.store(snapshot_of(bound_exact),
                                         std::memory_order_relaxed);
                } else if (sc.best == bound_exact) {
                    achiever_codes.insert(code);
                }
            }
            if (!chunk_complete) break;
            {
                std::lock_guard<std::mutex> lock(work_mu);
                detail::merge_range(done_ranges, lo, hi);
            }
            const std::uint64_t done =
                chunks_done.fetch_add(1, std::memory_order_relaxed) + 1;
            if (opts.checkpoint_every && done % opts.checkpoint_every == 0)
                write_checkpoint();
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SearchResult res;
    res.n = n;
    {
        std::lock_guard<std::mutex> lock(work_mu);
        res.complete = done_ranges.size() == 1 && done_ranges[0].first == 0 &&
                       done_ranges[0].second == total;
    }
    write_checkpoint();

    res.stats.words_scanned = scanned.load();
    res.stats.words_pruned_by_hints = pruned.load();
    res.stats.chunks_completed = chunks_done.load();

    if (bound_set) {
        res.min_maxocc = bound_exact;
        res.min_entropy_bits = log2_big(bound_exact);
        // Deduplicate achievers by symmetry class; report the class
        // representatives in increasing encoding order.
        std::set<Word> reps;
        for (std::uint64_t code : achiever_codes)
            reps.insert(symmetry_class_representative(Word::from_code(n, code)));
        MaxoccOptions wopts;
        wopts.max_witnesses = opts.max_witnesses;
        wopts.cache = &cache;
        for (const Word& rep : reps) {
            MaxoccResult mr = maxocc(rep, wopts);
            res.achievers.push_back(rep);
            res.witnesses.push_back(std::move(mr.witnesses));
        }
    }

    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

// Adaptive bit-flip descent: exhaustive 1-flip local search, with random
// multi-bit jumps whose flip rate escalates after repeated failures and
// resets on every improvement. Deterministic for a fixed rng_seed.
struct LocalSearchResult {
    Word word;
    OccCount value;
    std::uint64_t evaluations = 0; // full maxocc computations
    std::uint64_t jumps = 0;
};

inline LocalSearchResult local_search_adaptive(const Word& seed,
                                               double max_flip_rate = 0.5,
                                               unsigned attempts_per_rate = 20,
                                               std::uint64_t rng_seed = 1) {
    if (seed.empty())
        throw std::invalid_argument("local_search_adaptive: empty seed");
    const std::size_t n = seed.size();
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    MaxoccOptions mopts;
    mopts.cache = &cache;
    mopts.max_witnesses = 1;

    LocalSearchResult out;
    std::mt19937_64 rng(rng_seed);
    auto unit = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };

    auto flip = [](const Word& w, std::size_t i) {
        std::vector<std::uint8_t> letters(w.size());
        for (std::size_t p = 0; p < w.size(); ++p)
            letters[p] = static_cast<std::uint8_t>(w.letter(p));
        letters[i] ^= 1u;
        return Word::from_letters(letters);
    };

    // First-improvement descent over the 1-flip neighbourhood; neighbours
    // are rejected via the bounded scan and only improvements pay for an
    // exact evaluation.
    auto descend = [&](Word w, OccCount val) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < n; ++i) {
                Word nb = flip(w, i);
                OccCount strict = val - 1;
                if (!maxocc_exceeds(nb, strict, {}, mopts)) {
                    MaxoccResult mr = maxocc(nb, mopts);
                    ++out.evaluations;
                    w = std::move(nb);
                    val = std::move(mr.maxocc);
                    improved = true;
                    break;
                }
            }
        }
        return std::make_pair(std::move(w), std::move(val));
    };

    MaxoccResult seed_mr = maxocc(seed, mopts);
    ++out.evaluations;
    auto [best, best_val] = descend(seed, seed_mr.maxocc);

    const double base_rate = 1.0 / static_cast<double>(n);
    double rate = base_rate;
    unsigned failures = 0;
    while (true) {
        // Random jump from the incumbent at the current flip rate.
        std::vector<std::uint8_t> letters(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            const bool f = unit() < rate;
            letters[i] = static_cast<std::uint8_t>(best.letter(i) ^ int(f));
            any = any || f;
        }
        if (!any) {
            const std::size_t i = static_cast<std::size_t>(rng() % n);
            letters[i] ^= 1u;
        }
        ++out.jumps;
        Word cand = Word::from_letters(letters);
        MaxoccResult mr = maxocc(cand, mopts);
        ++out.evaluations;
        auto [w2, v2] = descend(cand, mr.maxocc);
        if (v2 < best_val) {
            best = std::move(w2);
            best_val = std::move(v2);
            rate = base_rate;
            failures = 0;
            continue;
        }
        if (++failures >= attempts_per_rate) {
            if (rate >= max_flip_rate) break;
            rate = std::min(rate * 2.0, max_flip_rate);
            failures = 0;
        }
    }

    out.word = std::move(best);
    out.value = std::move(best_val);
    return out;
}

// Inserts one letter (either value, every position) into each given word
// and returns the extension with the smallest maxocc; ties break toward
// the smallest dense encoding.
struct InsertionResult {
    Word word;
    OccCount value;
};

inline InsertionResult insertion_extend(const std::vector<Word>& base) {
    if (base.empty())
        throw std::invalid_argument("insertion_extend: empty input");
    const std::size_t n0 = base.front().size();
    for (const Word& w : base)
        if (w.size() != n0)
            throw std::invalid_argument("insertion_extend: unequal lengths");

    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    MaxoccOptions mopts;
    mopts.cache = &cache;
    mopts.max_witnesses = 1;

    std::optional<InsertionResult> best;
    for (const Word& w : base) {
        std::vector<std::uint8_t> letters(n0);
        for (std::size_t i = 0; i < n0; ++i)
            letters[i] = static_cast<std::uint8_t>(w.letter(i));
        for (std::size_t pos = 0; pos <= n0; ++pos) {
            for (std::uint8_t letter = 0; letter <= 1; ++letter) {
                std::vector<std::uint8_t> ext;
                ext.reserve(n0 + 1);
                ext.insert(ext.end(), letters.begin(), letters.begin() + pos);
                ext.push_back(letter);
                ext.insert(ext.end(), letters.begin() + pos, letters.end());
                Word cand = Word::from_letters(ext);
                OccCount v = maxocc(cand, mopts).maxocc;
                if (!best || v < best->value ||
                    (v == best->value && cand < best->word))
                    best = InsertionResult{std::move(cand), std::move(v)};
            }
        }
    }
    return *best;
}

// Super-additivity of minimal maxocc under concatenation:
// min_maxocc(n + m) >= min_maxocc(n) * min_maxocc(m).
struct SuperadditivityViolation {
    std::size_t n = 0, m = 0;
    OccCount combined, product;
};

inline std::vector<SuperadditivityViolation>
verify_superadditivity(const std::map<std::size_t, OccCount>& results) {
    std::vector<SuperadditivityViolation> violations;
    for (const auto& [n, vn] : results) {
        for (const auto& [m, vm] : results) {
            if (m < n) continue;
            auto it = results.find(n + m);
            if (it == results.end()) continue;
            if (it->second < vn * vm)
                violations.push_back({n, m, it->second, vn * vm});
        }
    }
    return violations;
}

// Certified lower bound on the entropy growth rate: every exact value
// gives log2(min_maxocc(n))/n as a bound; take the best.
inline double limit_lower_bound(const std::map<std::size_t, OccCount>& results) {
    double best = 0.0;
    for (const auto& [n, v] : results)
        if (v > 0)
            best = std::max(best, log2_big(v) / static_cast<double>(n));
    return best;
}

} // namespace subword
