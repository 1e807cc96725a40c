// Command-line surface for the subword library: exact occurrence counts,
// maximal subword occurrences and entropy, exhaustive/heuristic searches
// for minimal-entropy words, generating functions, and table reproduction.
//
// Output is a JSON record on stdout (CSV for `table --format csv`); counts
// are decimal strings so arbitrary precision survives round-trips. Exit
// codes: 0 success, 1 verification failure, 2 parse/usage error, 3 timeout
// (partial checkpoint written).

#include "subword/subword.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitTimeout = 3;

using nlohmann::json;
using namespace subword;

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

// "4.000" -> "4", "0.250" -> "0.25", "0.444" stays.
std::string fmt3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

unsigned cache_tau() {
    return static_cast<unsigned>(
        env_u64("SUBWORD_CACHE_TAU", OccCache::kDefaultTau));
}
std::uint64_t series_budget() {
    return env_u64("SUBWORD_SERIES_BUDGET", kDefaultSeriesBudget);
}
std::size_t comp_cap() {
    return static_cast<std::size_t>(
        env_u64("SUBWORD_COMP_CAP", GfOptions{}.composition_cap));
}

json record(const std::string& command, json inputs, json results,
            json stats = json::object()) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["stats"] = std::move(stats);
    j["version"] = kToolVersion;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json series_json(const OccMatrix& t) {
    json rows = json::array();
    for (std::size_t m = 0; m <= t.M; ++m) {
        json row = json::array();
        for (std::size_t r = 0; r <= t.R; ++r)
            row.push_back(to_decimal(t.at(m, r)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_occ(const std::string& w_str, const std::string& u_str,
            const std::string& algo) {
    const Word w = Word::parse(w_str);
    const Word u = Word::parse(u_str);
    json results;
    if (algo == "dp" || algo == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        const OccCount c = occ_dp(w, u);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        results["count"] = to_decimal(c);
        results["dp"] = {{"count", to_decimal(c)}, {"seconds", secs}};
    }
    if (algo == "runs" || algo == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        OccCache cache(cache_tau(), OccCache::Mode::single_thread);
        const OccCount c = occ_runs(w, u, cache);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        results["count"] = to_decimal(c);
        results["runs"] = {{"count", to_decimal(c)}, {"seconds", secs}};
    }
    if (algo == "both") {
        const bool agree = results["dp"]["count"] == results["runs"]["count"];
        results["agree"] = agree;
        if (!agree) {
            emit(record("occ", {{"word", w_str}, {"subword", u_str}}, results));
            std::cerr << "occ: dp and runs disagree\n";
            return kExitVerify;
        }
    }
    emit(record("occ", {{"word", w_str}, {"subword", u_str}, {"algo", algo}},
                results));
    return kExitOk;
}

int run_maxocc(const std::string& w_str, bool half, std::size_t witness_cap,
               std::optional<std::size_t> center) {
    const Word w = Word::parse(w_str);
    OccCache cache(cache_tau(), OccCache::Mode::single_thread);
    MaxoccOptions opts;
    opts.assume_half_length = half;
    opts.max_witnesses = witness_cap;
    opts.cache = &cache;
    opts.center_length = center;
    const auto t0 = std::chrono::steady_clock::now();
    MaxoccResult r = maxocc(w, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    json wit = json::array();
    for (const Word& u : r.witnesses) wit.push_back(u.str());
    emit(record("maxocc", {{"word", w_str}, {"half", half}},
                {{"maxocc", to_decimal(r.maxocc)},
                 {"entropy_bits", round3(r.entropy_bits)},
                 {"entropy_per_letter",
                  round3(r.entropy_bits / static_cast<double>(w.size()))},
                 {"witnesses", wit},
                 {"searched_lengths",
                  {r.searched_length_low, r.searched_length_high}},
                 {"heuristic", r.heuristic}},
                {{"seconds", secs}}));
    return kExitOk;
}

int run_bounds(std::size_t n, unsigned k) {
    const OccCount upper = maxocc_upper_bound(n);
    const LowerBoundResult lower = maxocc_lower_bound(n, k);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const OccCount ceil_lower =
        (numerator(lower.value) + denominator(lower.value) - 1) /
        denominator(lower.value);
    emit(record("bounds", {{"n", n}, {"alphabet", k}},
                {{"upper", to_decimal(upper)},
                 {"lower", lower.as_double()},
                 {"lower_ceil", to_decimal(ceil_lower)},
                 {"argmax_ell", lower.argmax_ell}}));
    return kExitOk;
}

json search_result_json(const SearchResult& r) {
    json achievers = json::array();
    json witnesses = json::array();
    for (std::size_t i = 0; i < r.achievers.size(); ++i) {
        achievers.push_back(r.achievers[i].str());
        json per = json::array();
        for (const Word& u : r.witnesses[i]) per.push_back(u.str());
        witnesses.push_back(std::move(per));
    }
    return {{"n", r.n},
            {"min_maxocc", to_decimal(r.min_maxocc)},
            {"min_entropy_bits", round3(r.min_entropy_bits)},
            {"entropy_per_letter",
             round3(r.min_entropy_bits / static_cast<double>(r.n))},
            {"achievers", achievers},
            {"witnesses", witnesses},
            {"complete", r.complete}};
}

json search_stats_json(const SearchResult& r) {
    return {{"words_scanned", r.stats.words_scanned},
            {"words_pruned_by_hints", r.stats.words_pruned_by_hints},
            {"chunks_completed", r.stats.chunks_completed},
            {"wall_seconds", r.stats.wall_seconds}};
}

int run_minentropy(std::size_t n, unsigned threads,
                   const std::string& checkpoint, bool resume, bool no_hints,
                   double timeout_secs) {
    SearchOptions opts;
    opts.workers = threads;
    opts.hint_pruning = !no_hints;
    opts.checkpoint_path = checkpoint;
    opts.resume = resume;
    opts.tau = cache_tau();
    std::atomic<bool> cancel{false};
    opts.cancel = &cancel;

    std::atomic<bool> finished{false};
    std::thread watchdog;
    if (timeout_secs > 0) {
        watchdog = std::thread([&] {
            const auto deadline = std::chrono::steady_clock::now() +
                                  std::chrono::duration<double>(timeout_secs);
            while (!finished.load()) {
                if (std::chrono::steady_clock::now() >= deadline) {
                    cancel.store(true);
                    return;
                }
                std::this_thread::sleep_for(std::chrono::milliseconds(20));
            }
        });
    }
    SearchResult r = min_entropy_exhaustive(n, opts);
    finished.store(true);
    if (watchdog.joinable()) watchdog.join();

    emit(record("minentropy",
                {{"n", n}, {"threads", threads}, {"checkpoint", checkpoint}},
                search_result_json(r), search_stats_json(r)));
    if (!r.complete) {
        std::cerr << "minentropy: interrupted; partial checkpoint written\n";
        return kExitTimeout;
    }
    return kExitOk;
}

int run_heuristic(std::size_t n, std::uint64_t seed, double max_rate,
                  unsigned attempts, const std::string& start_str) {
    if (n < 1 || n > 64) throw std::invalid_argument("heuristic: need 1 <= n <= 64");
    std::mt19937_64 g(seed);
    Word start;
    if (!start_str.empty()) {
        start = Word::parse(start_str);
        if (start.size() != n)
            throw std::invalid_argument("heuristic: start word has wrong length");
    } else {
        std::vector<std::uint8_t> letters(n);
        for (std::size_t i = 0; i < n; ++i)
            letters[i] = static_cast<std::uint8_t>(g() & 1u);
        start = Word::from_letters(letters);
    }
    LocalSearchResult r = local_search_adaptive(start, max_rate, attempts, g());
    const double bits = log2_big(r.value);
    emit(record("heuristic",
                {{"n", n}, {"seed", seed}, {"start", start.str()}},
                {{"word", r.word.str()},
                 {"maxocc", to_decimal(r.value)},
                 {"entropy_bits", round3(bits)},
                 {"entropy_per_letter", round3(bits / static_cast<double>(n))}},
                {{"evaluations", r.evaluations}, {"jumps", r.jumps}}));
    return kExitOk;
}

int run_extend(std::vector<std::string> words, const std::string& from_file) {
    if (!from_file.empty()) {
        std::ifstream in(from_file);
        if (!in)
            throw std::invalid_argument("extend: cannot read " + from_file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) words.push_back(line);
    }
    if (words.empty())
        throw std::invalid_argument("extend: no base words given");
    std::vector<Word> base;
    base.reserve(words.size());
    for (const std::string& s : words) base.push_back(Word::parse(s));
    InsertionResult r = insertion_extend(base);
    const double bits = log2_big(r.value);
    emit(record("extend", {{"base", words}},
                {{"word", r.word.str()},
                 {"maxocc", to_decimal(r.value)},
                 {"entropy_bits", round3(bits)},
                 {"entropy_per_letter",
                  round3(bits / static_cast<double>(r.word.size()))}}));
    return kExitOk;
}

int run_gf(const std::string& w_str, const std::string& v_str, bool verify,
           std::vector<std::size_t> series_dims) {
    const Word w = Word::parse(w_str);
    const Word v = Word::parse(v_str);
    GfOptions gopts;
    gopts.composition_cap = comp_cap();
    const auto t0 = std::chrono::steady_clock::now();
    RationalGF gf = gf_construct(w, v, gopts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    json results;
    results["gf"] = gf.str();
    results["num"] = gf.num().to_json();
    results["den"] = gf.den().to_json();
    bool ok = true;
    if (verify) {
        const std::size_t M = 12, R = 12;
        OccMatrix series = gf_series(gf, M, R);
        OccMatrix table = occ_table_periodic(w, v, M, R, series_budget());
        ok = series.cells == table.cells;
        results["verified"] = ok;
    }
    if (!series_dims.empty()) {
        OccMatrix series = gf_series(gf, series_dims[0], series_dims[1]);
        results["series"] = series_json(series);
    }
    emit(record("gf", {{"w", w_str}, {"v", v_str}}, results,
                {{"seconds", secs}}));
    if (!ok) {
        std::cerr << "gf: series does not match the direct table\n";
        return kExitVerify;
    }
    return kExitOk;
}

int run_table(std::size_t from, std::size_t to, const std::string& format,
              unsigned threads) {
    if (from < 1 || to < from)
        throw std::invalid_argument("table: need 1 <= from <= to");
    std::vector<SearchResult> rows;
    for (std::size_t n = from; n <= to; ++n) {
        SearchOptions opts;
        opts.workers = threads;
        opts.tau = cache_tau();
        rows.push_back(min_entropy_exhaustive(n, opts));
    }
    if (format == "csv") {
        std::cout << "n,word,maxocc,entropy_bits,entropy_per_letter,runs\n";
        for (const SearchResult& r : rows)
            for (const Word& a : r.achievers)
                std::cout << r.n << ',' << a.str() << ','
                          << to_decimal(r.min_maxocc) << ','
                          << fmt3(r.min_entropy_bits) << ','
                          << fmt3(r.min_entropy_bits / static_cast<double>(r.n))
                          << ',' << a.runs().size() << '\n';
        return kExitOk;
    }
    json jrows = json::array();
    for (const SearchResult& r : rows) {
        json jr = search_result_json(r);
        json runs = json::array();
        for (const Word& a : r.achievers) runs.push_back(a.runs().size());
        jr["runs"] = std::move(runs);
        jrows.push_back(std::move(jr));
    }
    emit(record("table", {{"from", from}, {"to", to}}, {{"rows", jrows}}));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subword occurrence counts, subword entropy, and "
                 "generating functions for binary words"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // occ
    std::string occ_w, occ_u, occ_algo = "both";
    CLI::App* occ = app.add_subcommand("occ", "count occurrences of a subword");
    occ->add_option("word", occ_w, "host word")->required();
    occ->add_option("subword", occ_u, "subword to count");
    occ->add_option("--algo", occ_algo, "dp, runs, or both")
        ->check(CLI::IsMember({"dp", "runs", "both"}));

    // maxocc
    std::string mx_w;
    bool mx_half = false;
    std::size_t mx_wit = 16;
    std::size_t mx_center = 0;
    CLI::App* mx = app.add_subcommand(
        "maxocc", "maximal subword occurrence count and witnesses");
    mx->add_option("word", mx_w, "word to analyse")->required();
    mx->add_flag("--half", mx_half,
                 "scan subword lengths only up to ceil(|w|/2)");
    mx->add_option("--witnesses", mx_wit, "maximal witnesses reported");
    mx->add_option("--center", mx_center, "length scan center (default 0.4|w|)");

    // bounds
    std::size_t bd_n = 0;
    unsigned bd_k = 2;
    CLI::App* bd = app.add_subcommand("bounds", "maxocc bounds at a length");
    bd->add_option("n", bd_n, "word length")->required();
    bd->add_option("--alphabet", bd_k, "alphabet size (default 2)");

    // minentropy
    std::size_t me_n = 0;
    unsigned me_threads = 1;
    std::string me_ckpt;
    bool me_resume = false, me_nohints = false;
    double me_timeout = 0.0;
    CLI::App* me = app.add_subcommand(
        "minentropy", "exhaustive minimal subword entropy at a length");
    me->add_option("n", me_n, "word length")->required();
    me->add_option("--threads", me_threads, "worker threads");
    me->add_option("--checkpoint", me_ckpt, "checkpoint file path");
    me->add_flag("--resume", me_resume, "resume from the checkpoint file");
    me->add_flag("--no-hints", me_nohints, "disable hint pruning");
    me->add_option("--timeout", me_timeout,
                   "seconds before cancelling (exit 3, checkpoint kept)");

    // heuristic
    std::size_t he_n = 0;
    std::uint64_t he_seed = 1;
    double he_rate = 0.5;
    unsigned he_attempts = 20;
    std::string he_start;
    CLI::App* he = app.add_subcommand(
        "heuristic", "adaptive bit-flip search for low-entropy words");
    he->add_option("n", he_n, "word length")->required();
    he->add_option("--seed", he_seed, "random seed");
    he->add_option("--max-flip-rate", he_rate, "jump flip-rate cap");
    he->add_option("--attempts", he_attempts, "failed jumps per rate level");
    he->add_option("--start", he_start, "explicit start word");

    // extend
    std::vector<std::string> ex_words;
    std::string ex_file;
    CLI::App* ex = app.add_subcommand(
        "extend", "best one-letter insertion into base words");
    ex->add_option("words", ex_words, "base words");
    ex->add_option("--from-file", ex_file, "file with one base word per line");

    // gf
    std::string gf_w, gf_v;
    bool gf_verify = false;
    std::vector<std::size_t> gf_series_dims;
    CLI::App* gf = app.add_subcommand(
        "gf", "rational generating function for occ(w^m, v^r)");
    gf->add_option("w", gf_w, "repeated host word")->required();
    gf->add_option("v", gf_v, "repeated subword")->required();
    gf->add_flag("--verify", gf_verify,
                 "check the series against the direct table (12x12)");
    gf->add_option("--series", gf_series_dims, "emit coefficients up to M R")
        ->expected(2);

    // table
    std::size_t tb_from = 1, tb_to = 12;
    std::string tb_format = "csv";
    unsigned tb_threads = 1;
    CLI::App* tb = app.add_subcommand(
        "table", "minimal subword entropy table over a length range");
    tb->add_option("--from", tb_from, "first length");
    tb->add_option("--to", tb_to, "last length");
    tb->add_option("--format", tb_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    tb->add_option("--threads", tb_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (occ->parsed()) return run_occ(occ_w, occ_u, occ_algo);
        if (mx->parsed())
            return run_maxocc(mx_w, mx_half, mx_wit,
                              mx_center ? std::make_optional(mx_center)
                                        : std::nullopt);
        if (bd->parsed()) return run_bounds(bd_n, bd_k);
        if (me->parsed())
            return run_minentropy(me_n, me_threads, me_ckpt, me_resume,
                                  me_nohints, me_timeout);
        if (he->parsed())
            return run_heuristic(he_n, he_seed, he_rate, he_attempts, he_start);
        if (ex->parsed()) return run_extend(ex_words, ex_file);
        if (gf->parsed())
            return run_gf(gf_w, gf_v, gf_verify, gf_series_dims);
        if (tb->parsed()) return run_table(tb_from, tb_to, tb_format, tb_threads);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    }
    return kExitOk;
}
