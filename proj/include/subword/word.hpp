#pragma once

// Binary words and their run-length form.
//
// A word is an immutable finite sequence over {0,1}. Short words (up to 64
// letters) are packed into a single machine word, most significant bit
// first, so that for equal lengths the integer code order coincides with
// lexicographic order. Longer words fall back to a shared byte vector.
// The run-length view (first letter + maximal block lengths) is computed
// on demand and cached inside the value; the cache is filled at most once,
// so concurrent readers of a shared Word are safe.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}
    // Position of the offending character in the input.
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// Run-length form: first letter plus the lengths of the maximal blocks.
// 0000110111001 <-> first letter 0, runs (4,2,1,3,2,1). The empty word has
// first letter 0 and no runs. Text form "0:4,2,1,3,2,1".
struct RunTuple {
    int first_letter = 0;
    std::vector<std::uint32_t> runs;

    std::size_t size() const { return runs.size(); }
    std::size_t total_length() const {
        std::size_t n = 0;
        for (std::uint32_t r : runs) n += r;
        return n;
    }
    int letter_of_run(std::size_t i) const {
        return first_letter ^ static_cast<int>(i & 1);
    }

    bool operator==(const RunTuple& o) const {
        return first_letter == o.first_letter && runs == o.runs;
    }
    bool operator!=(const RunTuple& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = std::to_string(first_letter);
        s += ':';
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(runs[i]);
        }
        return s;
    }

    // Parses "s:l1,l2,...". Every length must be a positive integer.
    static RunTuple parse(std::string_view text) {
        RunTuple rt;
        if (text.size() < 2 || (text[0] != '0' && text[0] != '1') || text[1] != ':')
            throw parse_error("run tuple must start with \"0:\" or \"1:\"", 0);
        rt.first_letter = text[0] - '0';
        std::size_t i = 2;
        if (i == text.size()) return rt; // "0:" is the empty word
        while (i < text.size()) {
            std::size_t start = i;
            std::uint64_t val = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                val = val * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (val > 0xffffffffull)
                    throw parse_error("run length out of range", start);
                ++i;
            }
            if (i == start)
                throw parse_error("expected run length digit", i);
            if (val == 0)
                throw parse_error("run lengths must be positive", start);
            rt.runs.push_back(static_cast<std::uint32_t>(val));
            if (i < text.size()) {
                if (text[i] != ',')
                    throw parse_error("expected ',' between run lengths", i);
                ++i;
                if (i == text.size())
                    throw parse_error("trailing ',' in run tuple", i - 1);
            }
        }
        return rt;
    }
};

class Word {
public:
    Word() = default; // empty word

    Word(const Word& o)
        : n_(o.n_), bits_(o.bits_), wide_(o.wide_),
          runs_(std::atomic_load_explicit(&o.runs_, std::memory_order_acquire)) {}
    Word(Word&& o) noexcept = default;
    Word& operator=(const Word& o) {
        if (this != &o) {
            n_ = o.n_;
            bits_ = o.bits_;
            wide_ = o.wide_;
            std::atomic_store_explicit(
                &runs_, std::atomic_load_explicit(&o.runs_, std::memory_order_acquire),
                std::memory_order_release);
        }
        return *this;
    }
    Word& operator=(Word&& o) noexcept = default;

    // Word of length n whose letters are the low n bits of code, most
    // significant of those bits first. Requires n <= 64.
    static Word from_code(std::size_t n, std::uint64_t code) {
        if (n > 64)
            throw std::invalid_argument("from_code: length exceeds 64");
        if (n < 64 && (code >> n) != 0)
            throw std::invalid_argument("from_code: code has more than n bits");
        Word w;
        w.n_ = n;
        w.bits_ = code;
        return w;
    }

    static Word from_letters(const std::vector<std::uint8_t>& letters) {
        Word w;
        w.n_ = letters.size();
        if (w.n_ <= 64) {
            for (std::uint8_t b : letters) w.bits_ = (w.bits_ << 1) | (b & 1u);
        } else {
            auto v = std::make_shared<std::vector<std::uint8_t>>(letters);
            for (auto& b : *v) b &= 1u;
            w.wide_ = std::move(v);
        }
        return w;
    }

    // Parses a string of '0'/'1' characters; anything else is rejected with
    // the index of the offending character.
    static Word parse(std::string_view text) {
        std::vector<std::uint8_t> letters;
        letters.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c != '0' && c != '1')
                throw parse_error(std::string("invalid character '") + c +
                                      "' in word",
                                  i);
            letters.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return from_letters(letters);
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int letter(std::size_t i) const {
        if (wide_) return (*wide_)[i];
        return static_cast<int>((bits_ >> (n_ - 1 - i)) & 1u);
    }
    int first() const { return letter(0); }
    int last() const { return letter(n_ - 1); }

    // Dense integer encoding; defined for words of at most 64 letters.
    std::uint64_t code() const {
        if (wide_)
            throw std::logic_error("code(): word longer than 64 letters");
        return bits_;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + letter(i));
        return s;
    }

    // Run-length view, computed once and cached in the value.
    const RunTuple& runs() const {
        auto sp = std::atomic_load_explicit(&runs_, std::memory_order_acquire);
        if (!sp) {
            auto fresh = std::make_shared<const RunTuple>(compute_runs());
            std::shared_ptr<const RunTuple> expected;
            if (std::atomic_compare_exchange_strong_explicit(
                    &runs_, &expected, fresh, std::memory_order_acq_rel,
                    std::memory_order_acquire))
                sp = std::move(fresh);
            else
                sp = std::move(expected); // another thread won; use its value
        }
        return *sp;
    }

    bool operator==(const Word& o) const {
        if (n_ != o.n_) return false;
        if (!wide_ && !o.wide_) return bits_ == o.bits_;
        for (std::size_t i = 0; i < n_; ++i)
            if (letter(i) != o.letter(i)) return false;
        return true;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

    // Orders by length, then lexicographically (equal-length short words
    // compare by their dense encoding, which is the same order).
    bool operator<(const Word& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (!wide_ && !o.wide_) return bits_ < o.bits_;
        for (std::size_t i = 0; i < n_; ++i)
            if (letter(i) != o.letter(i)) return letter(i) < o.letter(i);
        return false;
    }

private:
    RunTuple compute_runs() const {
        RunTuple rt;
        if (n_ == 0) return rt;
        rt.first_letter = letter(0);
        std::uint32_t len = 1;
        for (std::size_t i = 1; i < n_; ++i) {
            if (letter(i) == letter(i - 1)) {
                ++len;
            } else {
                rt.runs.push_back(len);
                len = 1;
            }
        }
        rt.runs.push_back(len);
        return rt;
    }

    std::size_t n_ = 0;
    std::uint64_t bits_ = 0;                          // packed letters, n_ <= 64
    std::shared_ptr<const std::vector<std::uint8_t>> wide_; // letters, n_ > 64
    mutable std::shared_ptr<const RunTuple> runs_;    // lazily filled cache
};

inline Word parse_word(std::string_view text) { return Word::parse(text); }

inline const RunTuple& to_runs(const Word& w) { return w.runs(); }

inline Word from_runs(const RunTuple& rt) {
    if (rt.first_letter != 0 && rt.first_letter != 1)
        throw std::invalid_argument("from_runs: first letter must be 0 or 1");
    std::vector<std::uint8_t> letters;
    letters.reserve(rt.total_length());
    for (std::size_t i = 0; i < rt.runs.size(); ++i) {
        if (rt.runs[i] == 0)
            throw std::invalid_argument("from_runs: run lengths must be positive");
        letters.insert(letters.end(), rt.runs[i],
                       static_cast<std::uint8_t>(rt.letter_of_run(i)));
    }
    return Word::from_letters(letters);
}

inline Word complement(const Word& w) {
    const std::size_t n = w.size();
    if (n <= 64) {
        const std::uint64_t mask = n == 64 ? ~0ull : ((1ull << n) - 1);
        return Word::from_code(n, w.code() ^ mask);
    }
    std::vector<std::uint8_t> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = static_cast<std::uint8_t>(1 - w.letter(i));
    return Word::from_letters(letters);
}

inline Word reverse(const Word& w) {
    const std::size_t n = w.size();
    std::vector<std::uint8_t> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = static_cast<std::uint8_t>(w.letter(n - 1 - i));
    return Word::from_letters(letters);
}

// Representative of the orbit {w, complement(w), reverse(w),
// complement(reverse(w))} with the smallest dense encoding (smallest word
// in length-then-lexicographic order for long words).
inline Word symmetry_class_representative(const Word& w) {
    Word best = w;
    const Word c = complement(w);
    const Word r = reverse(w);
    const Word cr = complement(r);
    for (const Word* cand : {&c, &r, &cr})
        if (*cand < best) best = *cand;
    return best;
}

// The 2^(n-1) words of length n that begin with the given letter, in
// increasing dense-encoding order. Length 0 yields just the empty word.
class WordRange {
public:
    explicit WordRange(std::size_t n, int start_letter = 0) : n_(n) {
        if (n > 63)
            throw std::invalid_argument("words_of_length: length exceeds 63");
        if (start_letter != 0 && start_letter != 1)
            throw std::invalid_argument("words_of_length: letter must be 0 or 1");
        if (n == 0) {
            start_ = 0;
            end_ = 1; // the empty word only
        } else {
            const std::uint64_t half = n == 1 ? 1 : (1ull << (n - 1));
            start_ = start_letter == 0 ? 0 : half;
            end_ = start_ + half;
        }
    }

    class iterator {
    public:
        iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
        Word operator*() const { return Word::from_code(n_, code_); }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        bool operator==(const iterator& o) const { return code_ == o.code_; }
        bool operator!=(const iterator& o) const { return code_ != o.code_; }

    private:
        std::size_t n_;
        std::uint64_t code_;
    };

    iterator begin() const { return iterator(n_, start_); }
    iterator end() const { return iterator(n_, end_); }
    std::uint64_t count() const { return end_ - start_; }

private:
    std::size_t n_;
    std::uint64_t start_;
    std::uint64_t end_;
};

inline WordRange words_of_length(std::size_t n, int start_letter = 0) {
    return WordRange(n, start_letter);
}

} // namespace subword
