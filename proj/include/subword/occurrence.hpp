#pragma once

// Exact occurrence counting occ(w, u): the number of index sets that
// realize u as a scattered subsequence of w. Two independent algorithms:
//
//   occ_dp    - classic dynamic program over the letters of w; the oracle.
//   occ_runs  - divide and conquer on run-length tuples; pivots on the
//               middle run of u, places it into same-letter run spans of w
//               by inclusion-exclusion, and recurses on both sides.
//
// occ_runs memoizes sub-results whose operands both have at most tau runs
// in a shared cache that tolerates concurrent use (all writers compute the
// same value for a key, so last-writer-wins races are benign).

#include "subword/bigint.hpp"
#include "subword/binomial.hpp"
#include "subword/word.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace subword {

// Number of occurrences of u in w by the standard subsequence-count
// recurrence; O(|w|·|u|) big-integer additions.
inline OccCount occ_dp(const Word& w, const Word& u) {
    const std::size_t n = w.size(), m = u.size();
    if (m > n) return OccCount(0);
    // dp[j] = occurrences of u[0..j) in the prefix of w scanned so far.
    std::vector<OccCount> dp(m + 1);
    dp[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = w.letter(i);
        const std::size_t top = std::min(m, i + 1);
        for (std::size_t j = top; j >= 1; --j)
            if (u.letter(j - 1) == a) dp[j] += dp[j - 1];
    }
    return dp[m];
}

// Ways to choose ell_p positions out of the L same-letter positions that
// span runs k..k' of w (total length L, end runs of lengths len_k and
// len_k2) such that at least one position falls in run k and at least one
// in run k'. For k = k' (signalled by L == len_k == len_k2) every placement
// inside the single run qualifies.
inline OccCount pinned_run_placements(std::uint64_t L, std::uint64_t len_k,
                                      std::uint64_t len_k2, std::uint64_t ell_p) {
    const auto l = static_cast<std::int64_t>(L);
    const auto p = static_cast<std::int64_t>(ell_p);
    if (L == len_k && L == len_k2) return binomial(l, p); // single-run span
    const auto a = static_cast<std::int64_t>(len_k);
    const auto b = static_cast<std::int64_t>(len_k2);
    return binomial(l, p) - binomial(l - a, p) - binomial(l - b, p) +
           binomial(l - a - b, p);
}

// Memo key: both run tuples packed one run per byte (up to 16 runs of
// length at most 255 each), plus run counts and a flag telling whether the
// two leading runs carry the same letter.
struct OccCacheKey {
    std::array<std::uint64_t, 2> w_runs{};
    std::array<std::uint64_t, 2> u_runs{};
    std::uint32_t meta = 0; // w run count | u run count << 8 | same-letter << 16

    bool operator==(const OccCacheKey& o) const {
        return w_runs == o.w_runs && u_runs == o.u_runs && meta == o.meta;
    }
};

struct OccCacheKeyHash {
    std::size_t operator()(const OccCacheKey& k) const {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        return static_cast<std::size_t>(
            mix(k.w_runs[0] ^
                mix(k.w_runs[1] ^ mix(k.u_runs[0] ^ mix(k.u_runs[1] ^ k.meta)))));
    }
};

// Shared memo for occ_runs sub-results. Sharded hash maps behind
// reader-writer locks; last writer wins. tau = 0 disables storage entirely.
class OccCache {
public:
    static constexpr unsigned kDefaultTau = 8;
    static constexpr unsigned kMaxTau = 16; // key packing limit
    enum class Mode { shared, single_thread };

    explicit OccCache(unsigned tau = kDefaultTau, Mode mode = Mode::shared)
        : tau_(std::min(tau, kMaxTau)), mode_(mode) {}

    unsigned tau() const { return tau_; }
    Mode mode() const { return mode_; }

    bool try_get(const OccCacheKey& key, OccCount& out) const {
        const Shard& s = shard(key);
        if (mode_ == Mode::single_thread) {
            auto it = s.map.find(key);
            if (it == s.map.end()) { ++misses_; return false; }
            out = it->second;
            ++hits_;
            return true;
        }
        std::shared_lock<std::shared_mutex> lock(s.mutex);
        auto it = s.map.find(key);
        if (it == s.map.end()) {
            ++misses_;
            return false;
        }
        out = it->second;
        ++hits_;
        return true;
    }

    void store(const OccCacheKey& key, const OccCount& value) {
        Shard& s = shard(key);
        if (mode_ == Mode::single_thread) {
            s.map[key] = value;
            return;
        }
        std::unique_lock<std::shared_mutex> lock(s.mutex);
        s.map[key] = value;
    }

    std::size_t entries() const {
        std::size_t total = 0;
        for (const Shard& s : shards_) {
            if (mode_ == Mode::single_thread) {
                total += s.map.size();
            } else {
                std::shared_lock<std::shared_mutex> lock(s.mutex);
                total += s.map.size();
            }
        }
        return total;
    }
    std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
    std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

    void clear() {
        for (Shard& s : shards_) {
            std::unique_lock<std::shared_mutex> lock(s.mutex);
            s.map.clear();
        }
        hits_.store(0);
        misses_.store(0);
    }

private:
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<OccCacheKey, OccCount, OccCacheKeyHash> map;
    };
    static constexpr std::size_t kShards = 64;

    Shard& shard(const OccCacheKey& k) {
        return shards_[OccCacheKeyHash{}(k) % kShards];
    }
    const Shard& shard(const OccCacheKey& k) const {
        return shards_[OccCacheKeyHash{}(k) % kShards];
    }

    unsigned tau_;
    Mode mode_;
    std::array<Shard, kShards> shards_;
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
};

namespace detail {

// Recursive counter over run-index ranges of fixed run arrays. A subword
// of w is identified by a half-open run range [lo, hi); letters follow
// from the absolute index parity, so only relative letter equality enters
// the memo key.
class RunCounter {
public:
    RunCounter(const std::vector<std::uint32_t>& w_runs, int w_first,
               const std::vector<std::uint32_t>& u_runs, int u_first,
               OccCache& cache)
        : wr_(w_runs), ur_(u_runs), w_first_(w_first), u_first_(u_first),
          cache_(cache) {
        wpre_.resize(wr_.size() + 1, 0);
        for (std::size_t i = 0; i < wr_.size(); ++i)
            wpre_[i + 1] = wpre_[i] + wr_[i];
        upre_.resize(ur_.size() + 1, 0);
        for (std::size_t i = 0; i < ur_.size(); ++i)
            upre_[i + 1] = upre_[i] + ur_[i];
    }

    OccCount count() {
        return rec(0, wr_.size(), 0, ur_.size());
    }

private:
    int w_letter(std::size_t k) const { return w_first_ ^ static_cast<int>(k & 1); }
    int u_letter(std::size_t p) const { return u_first_ ^ static_cast<int>(p & 1); }

    static bool pack_runs(const std::vector<std::uint32_t>& runs, std::size_t lo,
                          std::size_t hi, std::array<std::uint64_t, 2>& out) {
        out = {0, 0};
        for (std::size_t i = lo; i < hi; ++i) {
            if (runs[i] > 255) return false;
            const std::size_t j = i - lo;
            out[j >> 3] |= static_cast<std::uint64_t>(runs[i]) << ((j & 7) * 8);
        }
        return true;
    }

    bool pack_key(std::size_t wlo, std::size_t whi, std::size_t ulo,
                  std::size_t uhi, OccCacheKey& key) const {
        const std::size_t wn = whi - wlo, un = uhi - ulo;
        const unsigned tau = cache_.tau();
        if (tau == 0 || wn > tau || un > tau) return false;
        if (!pack_runs(wr_, wlo, whi, key.w_runs)) return false;
        if (!pack_runs(ur_, ulo, uhi, key.u_runs)) return false;
        const unsigned same =
            static_cast<unsigned>(w_letter(wlo) == u_letter(ulo));
        key.meta = static_cast<std::uint32_t>(wn) |
                   (static_cast<std::uint32_t>(un) << 8) | (same << 16);
        return true;
    }

    OccCount rec(std::size_t wlo, std::size_t whi, std::size_t ulo, std::size_t uhi) {
        if (ulo == uhi) return OccCount(1);           // occ(anything, empty) = 1
        if (wlo == whi) return OccCount(0);
        const std::size_t uruns = uhi - ulo, wruns = whi - wlo;
        if (uruns > wruns) return OccCount(0);
        if (upre_[uhi] - upre_[ulo] > wpre_[whi] - wpre_[wlo]) return OccCount(0);

        OccCacheKey key;
        const bool cached = pack_key(wlo, whi, ulo, uhi, key);
        if (cached) {
            OccCount hit;
            if (cache_.try_get(key, hit)) return hit;
        }

        // Pivot on the middle run of u.
        const std::size_t p = ulo + (uruns + 1) / 2 - 1;
        const std::uint64_t plen = ur_[p];
        const int pletter = u_letter(p);
        // Runs of u strictly right of the pivot must fit right of k'.
        const std::size_t right_runs = uhi - 1 - p;

        OccCount total(0);
        for (std::size_t k = wlo; k < whi; ++k) {
            if (w_letter(k) != pletter) continue;
            if (k - wlo < p - ulo) continue; // too few runs left of k
            const OccCount left = rec(wlo, k, ulo, p);
            if (left == 0) continue;
            const std::size_t k2_max = whi - 1 - right_runs;
            std::uint64_t span = 0;
            for (std::size_t k2 = k; k2 <= k2_max; k2 += 2) {
                span += wr_[k2];
                const OccCount place =
                    k2 == k ? binomial(static_cast<std::int64_t>(wr_[k]),
                                       static_cast<std::int64_t>(plen))
                            : pinned_run_placements(span, wr_[k], wr_[k2], plen);
                if (place == 0) continue;
                const OccCount right = rec(k2 + 1, whi, p + 1, uhi);
                if (right == 0) continue;
                total += left * place * right;
            }
        }

        if (cached) cache_.store(key, total);
        return total;
    }

    const std::vector<std::uint32_t>& wr_;
    const std::vector<std::uint32_t>& ur_;
    std::vector<std::uint64_t> wpre_, upre_;
    int w_first_, u_first_;
    OccCache& cache_;
};

// occ on raw run arrays; the entry point used by the subword scanners,
// which keep candidate subwords in run form and never build Word values
// for them.
inline OccCount occ_runs_raw(const std::vector<std::uint32_t>& w_runs, int w_first,
                             const std::vector<std::uint32_t>& u_runs, int u_first,
                             OccCache& cache) {
    return RunCounter(w_runs, w_first, u_runs, u_first, cache).count();
}

} // namespace detail

inline OccCount occ_runs(const Word& w, const Word& u, OccCache& cache) {
    const RunTuple& wr = w.runs();
    const RunTuple& ur = u.runs();
    return detail::occ_runs_raw(wr.runs, wr.first_letter, ur.runs, ur.first_letter,
                                cache);
}

inline OccCount occ_runs(const Word& w, const Word& u) {
    OccCache cache(OccCache::kDefaultTau, OccCache::Mode::single_thread);
    return occ_runs(w, u, cache);
}

} // namespace subword
