#pragma once

// Bivariate generating functions f_{w,v}(x, y) = sum occ(w^m, v^r) x^m y^r.
//
// The function is rational; the construction follows the transfer-matrix
// shape of the rationality proof. Occurrences of v^r in w^m split into
// clusters along copies of w: a composition of |v| tells how many letters
// land in each visited copy. Base constants (pinned occurrences of pieces
// of v in a single copy) feed rational weights g^{s,t}(x) whose only
// denominators are powers of (1-x); the partial generating functions
// f^{(t)} (occurrences whose last letter sits at position t of the last
// touched copy) then satisfy a linear system A f = b over Z[x,y] solved by
// fraction-free elimination, and f assembles from their sum.

#include "subword/bigint.hpp"
#include "subword/binomial.hpp"
#include "subword/occurrence.hpp"
#include "subword/polynomial.hpp"
#include "subword/word.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subword {

// Ordered positive parts; cutting v after the prefix sums yields the
// cluster words whose concatenation is v.
struct Composition {
    std::vector<std::size_t> parts;

    std::size_t total() const {
        std::size_t s = 0;
        for (std::size_t p : parts) s += p;
        return s;
    }
    std::vector<Word> clusters(const Word& v) const {
        std::vector<Word> out;
        std::size_t pos = 0;
        for (std::size_t p : parts) {
            std::vector<std::uint8_t> letters(p);
            for (std::size_t i = 0; i < p; ++i)
                letters[i] = static_cast<std::uint8_t>(v.letter(pos + i));
            out.push_back(Word::from_letters(letters));
            pos += p;
        }
        return out;
    }
};

// All 2^(n-1) compositions of n, by ascending cut-set bitmask.
inline std::vector<Composition> compositions_of(std::size_t n) {
    if (n == 0) return {};
    if (n > 24)
        throw std::invalid_argument("compositions_of: too many compositions");
    std::vector<Composition> out;
    out.reserve(1ull << (n - 1));
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        Composition c;
        std::size_t prev = 0;
        for (std::size_t b = 0; b + 1 < n; ++b) {
            if (mask >> b & 1u) {
                c.parts.push_back(b + 1 - prev);
                prev = b + 1;
            }
        }
        c.parts.push_back(n - prev);
        out.push_back(std::move(c));
    }
    return out;
}

// Exact table of occ(w^m, v^r), 0 <= m <= M, 0 <= r <= R.
struct OccMatrix {
    Word w, v;
    std::size_t M = 0, R = 0;
    std::vector<std::vector<OccCount>> cells; // cells[m][r]

    const OccCount& at(std::size_t m, std::size_t r) const {
        return cells[m][r];
    }
    bool operator==(const OccMatrix& o) const { return cells == o.cells; }
};

inline constexpr std::uint64_t kDefaultSeriesBudget = 100000000ull; // 1e8

// One DP sweep over the letters of w^M against prefixes of v^R, with a
// snapshot after every full copy of w; cell (m, r) is the count of v^r in
// w^m. Work is (M|w|)·(R|v|) big-integer additions, guarded by the budget.
inline OccMatrix occ_table_periodic(const Word& w, const Word& v, std::size_t M,
                                    std::size_t R,
                                    std::uint64_t budget = kDefaultSeriesBudget) {
    if (w.empty() || v.empty())
        throw std::invalid_argument("occ_table_periodic: empty word");
    const std::size_t nw = w.size(), nv = v.size();
    const std::uint64_t cost =
        static_cast<std::uint64_t>(M) * nw * static_cast<std::uint64_t>(R) * nv;
    if (cost > budget)
        throw std::invalid_argument(
            "occ_table_periodic: budget exceeded for M=" + std::to_string(M) +
            " R=" + std::to_string(R) + " |w|=" + std::to_string(nw) +
            " |v|=" + std::to_string(nv));

    OccMatrix t;
    t.w = w;
    t.v = v;
    t.M = M;
    t.R = R;
    t.cells.assign(M + 1, std::vector<OccCount>(R + 1));
    const std::size_t plen = R * nv;
    std::vector<OccCount> dp(plen + 1);
    dp[0] = 1;
    t.cells[0][0] = 1;
    for (std::size_t m = 1; m <= M; ++m) {
        for (std::size_t i = 0; i < nw; ++i) {
            const int a = w.letter(i);
            for (std::size_t j = plen; j >= 1; --j)
                if (v.letter((j - 1) % nv) == a) dp[j] += dp[j - 1];
        }
        for (std::size_t r = 0; r <= R; ++r) t.cells[m][r] = dp[r * nv];
    }
    return t;
}

// Rational function of x and y in canonical form: numerator and
// denominator coprime, jointly content-free, denominator constant term
// positive (and nonzero, so a power series at the origin exists).
class RationalGF {
public:
    RationalGF() : num_(), den_(BivariatePoly::constant(1)) {}
    RationalGF(const BivariatePoly& num, const BivariatePoly& den) {
        normalize(num.to_xy(), den.to_xy());
    }
    RationalGF(poly::XYPoly num, poly::XYPoly den) {
        normalize(std::move(num), std::move(den));
    }

    const BivariatePoly& num() const { return num_; }
    const BivariatePoly& den() const { return den_; }

    bool operator==(const RationalGF& o) const {
        // Cross-multiplication: no GCD needed for equality.
        return poly::is_zero(poly::xy_sub(poly::xy_mul(num_.to_xy(), o.den_.to_xy()),
                                          poly::xy_mul(o.num_.to_xy(), den_.to_xy())));
    }
    bool operator!=(const RationalGF& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }
    nlohmann::json to_json() const {
        return nlohmann::json{{"num", num_.to_json()}, {"den", den_.to_json()}};
    }
    static RationalGF from_json(const nlohmann::json& j) {
        return RationalGF(BivariatePoly::from_json(j.at("num")),
                          BivariatePoly::from_json(j.at("den")));
    }

private:
    static bool divisible_by_1mx(const poly::XYPoly& p) {
        poly::YPoly sum; // p(1, y)
        for (const poly::YPoly& c : p) sum = poly::y_add(sum, c);
        return sum.empty();
    }
    static poly::XYPoly div_1mx(const poly::XYPoly& p) {
        // p = (1 - x) q  =>  q_i = p_i + q_{i-1}.
        poly::XYPoly q(p.size() - 1);
        poly::YPoly carry;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            carry = poly::y_add(p[i], carry);
            q[i] = carry;
        }
        poly::trim(q);
        return q;
    }

    void normalize(poly::XYPoly num, poly::XYPoly den) {
        if (poly::is_zero(den))
            throw std::invalid_argument("RationalGF: zero denominator");
        if (den[0].empty() || den[0][0] == 0)
            throw std::invalid_argument(
                "RationalGF: denominator constant term is zero");
        if (poly::is_zero(num)) {
            num_ = BivariatePoly();
            den_ = BivariatePoly::constant(1);
            return;
        }
        // Cheap pre-reduction: strip common powers of (1 - x) before the
        // general GCD (they dominate the constructed fractions).
        while (divisible_by_1mx(num) && divisible_by_1mx(den)) {
            num = div_1mx(num);
            den = div_1mx(den);
        }
        poly::XYPoly g = poly::xy_gcd(num, den);
        const bool g_trivial =
            g.size() == 1 && g[0].size() == 1 && (g[0][0] == 1 || g[0][0] == -1);
        if (!g_trivial) {
            num = poly::xy_exact_div(num, g);
            den = poly::xy_exact_div(den, g);
        }
        OccCount c = 0;
        for (const poly::YPoly& yc : num)
            for (const OccCount& v : yc) c = boost::multiprecision::gcd(c, v);
        for (const poly::YPoly& yc : den)
            for (const OccCount& v : yc) c = boost::multiprecision::gcd(c, v);
        if (den[0].empty() || den[0][0] == 0)
            throw std::logic_error("RationalGF: reduction broke the origin");
        if (den[0][0] < 0) c = -c;
        if (c != 1) {
            for (poly::YPoly& yc : num)
                for (OccCount& v : yc) v /= c;
            for (poly::YPoly& yc : den)
                for (OccCount& v : yc) v /= c;
        }
        num_ = BivariatePoly::from_xy(num);
        den_ = BivariatePoly::from_xy(den);
    }

    BivariatePoly num_, den_;
};

struct GfOptions {
    std::size_t composition_cap = 14; // enumerating 2^(|v|-1) compositions
};

namespace detail {

inline Word slice(const Word& w, std::size_t pos, std::size_t len) {
    std::vector<std::uint8_t> letters(len);
    for (std::size_t i = 0; i < len; ++i)
        letters[i] = static_cast<std::uint8_t>(w.letter(pos + i));
    return Word::from_letters(letters);
}

} // namespace detail

// Constructs f_{w,v}(x, y) exactly. See the header comment for the shape
// of the computation; the linear system is solved through determinants
// (Cramer) with fraction-free elimination, so all arithmetic stays in
// Z[x,y] until the final normalization.
inline RationalGF gf_construct(const Word& w, const Word& v,
                               const GfOptions& opts = {}) {
    if (w.empty() || v.empty())
        throw std::invalid_argument("gf_construct: empty word");
    const std::size_t W = w.size(), Lv = v.size();
    if (Lv > opts.composition_cap)
        throw std::invalid_argument("gf_construct: |v| exceeds composition cap");
    const std::size_t K = Lv - 1; // (1-x) exponent carried by the g weights

    // Pieces v[i..j) and their pinned occurrence counts in one copy of w:
    //   first_at[p][s]: occurrences of piece p in w whose first letter is
    //                   pinned at position s (0-based); last_at likewise.
    std::vector<std::vector<std::size_t>> piece_id(Lv + 1,
                                                   std::vector<std::size_t>(Lv + 1));
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    for (std::size_t i = 0; i < Lv; ++i)
        for (std::size_t j = i + 1; j <= Lv; ++j) {
            piece_id[i][j] = pieces.size();
            pieces.emplace_back(i, j);
        }
    const std::size_t P = pieces.size();
    std::vector<OccCount> occ_in(P);
    std::vector<std::vector<OccCount>> first_at(P, std::vector<OccCount>(W));
    std::vector<std::vector<OccCount>> last_at(P, std::vector<OccCount>(W));
    for (std::size_t p = 0; p < P; ++p) {
        const auto [i, j] = pieces[p];
        const Word piece = detail::slice(v, i, j - i);
        occ_in[p] = occ_dp(w, piece);
        const Word tail = detail::slice(piece, 1, piece.size() - 1);
        const Word head = detail::slice(piece, 0, piece.size() - 1);
        for (std::size_t s = 0; s < W; ++s) {
            if (w.letter(s) == piece.first())
                first_at[p][s] =
                    occ_dp(detail::slice(w, s + 1, W - s - 1), tail);
            if (w.letter(s) == piece.last())
                last_at[p][s] = occ_dp(detail::slice(w, 0, s), head);
        }
    }

    // Pinned occurrences of the whole v inside one copy: first letter at
    // s, last letter at t.
    std::vector<std::vector<OccCount>> a1(W, std::vector<OccCount>(W));
    for (std::size_t s = 0; s < W; ++s) {
        if (Lv == 1) {
            if (w.letter(s) == v.first()) a1[s][s] = 1;
            continue;
        }
        if (w.letter(s) != v.first()) continue;
        const Word middle = detail::slice(v, 1, Lv - 2);
        for (std::size_t tpos = s + 1; tpos < W; ++tpos)
            if (w.letter(tpos) == v.last())
                a1[s][tpos] = occ_dp(detail::slice(w, s + 1, tpos - s - 1), middle);
    }

    // Multi-cluster compositions, grouped by (cluster count, first piece,
    // last piece); the middle clusters contribute free occurrence factors.
    // weight[d][fp][lp] = sum over compositions of the middle products.
    std::vector<std::vector<std::vector<OccCount>>> weight(
        Lv + 1, std::vector<std::vector<OccCount>>(P, std::vector<OccCount>(P)));
    for (const Composition& comp : compositions_of(Lv)) {
        const std::size_t d = comp.parts.size();
        if (d < 2) continue;
        OccCount mid = 1;
        std::size_t pos = comp.parts[0];
        for (std::size_t c = 1; c + 1 < d; ++c) {
            mid *= occ_in[piece_id[pos][pos + comp.parts[c]]];
            pos += comp.parts[c];
        }
        if (mid == 0) continue;
        const std::size_t fp = piece_id[0][comp.parts[0]];
        const std::size_t lp = piece_id[Lv - comp.parts[d - 1]][Lv];
        weight[d][fp][lp] += mid;
    }

    // x-polynomials P_{s,t} with g^{s,t}(x) = P_{s,t}(x) / (1-x)^K: the
    // single-cluster term carries (1-x)^K, a d-cluster composition carries
    // x^(d-1) (1-x)^(K-d+1) from summing binom(m-2, d-2) x^(m-1).
    std::vector<poly::YPoly> pow1mx(K + 2);
    pow1mx[0] = poly::YPoly{OccCount(1)};
    const poly::YPoly one_minus_x{OccCount(1), OccCount(-1)};
    for (std::size_t e = 1; e <= K + 1; ++e)
        pow1mx[e] = poly::y_mul(pow1mx[e - 1], one_minus_x);

    std::vector<std::vector<poly::YPoly>> p_st(W, std::vector<poly::YPoly>(W));
    for (std::size_t s = 0; s < W; ++s)
        for (std::size_t t = 0; t < W; ++t)
            if (a1[s][t] != 0)
                p_st[s][t] = poly::y_scale(pow1mx[K], a1[s][t]);
    for (std::size_t d = 2; d <= Lv; ++d) {
        // x^(d-1) (1-x)^(K-d+1)
        poly::YPoly base(d - 1, OccCount(0));
        base.insert(base.end(), pow1mx[K - d + 1].begin(), pow1mx[K - d + 1].end());
        for (std::size_t fp = 0; fp < P; ++fp)
            for (std::size_t lp = 0; lp < P; ++lp) {
                if (weight[d][fp][lp] == 0) continue;
                for (std::size_t s = 0; s < W; ++s) {
                    if (first_at[fp][s] == 0) continue;
                    for (std::size_t t = 0; t < W; ++t) {
                        if (last_at[lp][t] == 0) continue;
                        p_st[s][t] = poly::y_add(
                            p_st[s][t],
                            poly::y_scale(base, weight[d][fp][lp] *
                                                    first_at[fp][s] *
                                                    last_at[lp][t]));
                    }
                }
            }
    }

    // Row sums and partial sums entering the linear system.
    std::vector<poly::YPoly> gamma(W); // sum over s of P_{s,t}
    for (std::size_t t = 0; t < W; ++t)
        for (std::size_t s = 0; s < W; ++s)
            gamma[t] = poly::y_add(gamma[t], p_st[s][t]);
    // tail[tp][t] = sum over s > tp of P_{s,t}
    std::vector<std::vector<poly::YPoly>> tail(W, std::vector<poly::YPoly>(W));
    for (std::size_t tp = 0; tp < W; ++tp)
        for (std::size_t t = 0; t < W; ++t) {
            poly::YPoly acc;
            for (std::size_t s = tp + 1; s < W; ++s)
                acc = poly::y_add(acc, p_st[s][t]);
            tail[tp][t] = std::move(acc);
        }

    // A[t][tp] = (1-x)^(K+1) delta - x y Gamma_t - (1-x) y tail[tp][t],
    // b[t] = y Gamma_t; everything has y-degree at most 1.
    auto lift = [](const poly::YPoly& y0, const poly::YPoly& y1) {
        poly::XYPoly r(std::max(y0.size(), y1.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            poly::YPoly cell;
            const OccCount c0 = i < y0.size() ? y0[i] : OccCount(0);
            const OccCount c1 = i < y1.size() ? y1[i] : OccCount(0);
            if (c1 != 0)
                cell = poly::YPoly{c0, c1};
            else if (c0 != 0)
                cell = poly::YPoly{c0};
            r[i] = std::move(cell);
        }
        poly::trim(r);
        return r;
    };

    std::vector<std::vector<poly::XYPoly>> A(W, std::vector<poly::XYPoly>(W));
    std::vector<poly::XYPoly> b(W);
    for (std::size_t t = 0; t < W; ++t) {
        poly::YPoly x_gamma(1, OccCount(0)); // x * Gamma_t
        x_gamma.insert(x_gamma.end(), gamma[t].begin(), gamma[t].end());
        poly::trim(x_gamma);
        for (std::size_t tp = 0; tp < W; ++tp) {
            poly::YPoly y1 = x_gamma;
            if (tp + 1 < W)
                y1 = poly::y_add(y1, poly::y_mul(one_minus_x, tail[tp][t]));
            y1 = poly::y_neg(std::move(y1));
            poly::YPoly y0 = t == tp ? pow1mx[K + 1] : poly::YPoly{};
            A[t][tp] = lift(y0, y1);
        }
        b[t] = lift({}, gamma[t]);
    }

    // Cramer: f^(t) = det(A with column t replaced by b) / det(A). Only
    // the sum over t is needed, and the rank-one identity
    //   det(A + b 1^T) = det(A) + sum_t det(A with column t <- b)
    // gets it from one extra determinant instead of W of them.
    std::vector<std::vector<poly::XYPoly>> A_plus = A;
    for (std::size_t row = 0; row < W; ++row)
        for (std::size_t col = 0; col < W; ++col)
            A_plus[row][col] = poly::xy_add(A_plus[row][col], b[row]);
    poly::XYPoly det = poly::xy_det_bareiss(std::move(A));
    if (poly::is_zero(det))
        throw std::logic_error("gf_construct: singular system");
    poly::XYPoly num_sum =
        poly::xy_sub(poly::xy_det_bareiss(std::move(A_plus)), det);

    // f = 1/(1-x) + x/(1-x) * sum_t f^(t)
    //   = (det + x * num_sum) / ((1-x) det).
    poly::XYPoly shifted;
    if (!poly::is_zero(num_sum)) {
        shifted.resize(num_sum.size() + 1);
        for (std::size_t i = 0; i < num_sum.size(); ++i)
            shifted[i + 1] = num_sum[i];
    }
    poly::XYPoly fnum = poly::xy_add(det, shifted);
    poly::XYPoly fden = poly::xy_sub(det, [&] {
        poly::XYPoly xd(det.size() + 1);
        for (std::size_t i = 0; i < det.size(); ++i) xd[i + 1] = det[i];
        return xd;
    }());
    return RationalGF(std::move(fnum), std::move(fden));
}

// Taylor coefficients of a rational function at the origin, as an exact
// table; throws if any coefficient fails to be a non-negative integer
// (occurrence generating functions always yield integers).
inline OccMatrix gf_series(const RationalGF& gf, std::size_t M, std::size_t R) {
    const auto& pn = gf.num().terms();
    const auto& qd = gf.den().terms();
    BigRational q00(gf.den().coeff(0, 0));
    if (q00 == 0)
        throw std::invalid_argument("gf_series: denominator constant term zero");

    OccMatrix t;
    t.M = M;
    t.R = R;
    t.cells.assign(M + 1, std::vector<OccCount>(R + 1));
    std::vector<std::vector<BigRational>> f(M + 1,
                                            std::vector<BigRational>(R + 1));
    for (std::size_t m = 0; m <= M; ++m) {
        for (std::size_t r = 0; r <= R; ++r) {
            BigRational acc(0);
            auto itp = pn.find(BivariatePoly::Monomial{
                static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(r)});
            if (itp != pn.end()) acc = itp->second;
            for (const auto& [mono, c] : qd) {
                if (mono.dx == 0 && mono.dy == 0) continue;
                if (mono.dx > m || mono.dy > r) continue;
                acc -= BigRational(c) * f[m - mono.dx][r - mono.dy];
            }
            f[m][r] = acc / q00;
            const BigRational& val = f[m][r];
            if (boost::multiprecision::denominator(val) != 1)
                throw std::domain_error("gf_series: non-integer coefficient");
            t.cells[m][r] = boost::multiprecision::numerator(val);
        }
    }
    return t;
}

// Spot checks of the published closed forms against the DP table:
//   occ((0011)^m, (01)^r)   = 4^r binom(m+r, m-r)
//   occ((01)^m,   (01)^r)   = binom(m+r, m-r)
//   and the four-term recurrence for occ((000111)^m, (0011)^r).
struct ClosedFormReport {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> mismatches;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            mismatches.push_back(what);
        }
    }
};

inline ClosedFormReport verify_closed_forms(std::size_t max_m = 20,
                                            std::size_t max_r = 20) {
    ClosedFormReport rep;
    const Word w0011 = Word::parse("0011");
    const Word w01 = Word::parse("01");
    const Word w000111 = Word::parse("000111");
    const Word v0011 = Word::parse("0011");

    OccMatrix ta = occ_table_periodic(w0011, w01, max_m, max_r);
    OccMatrix tb = occ_table_periodic(w01, w01, max_m, max_r);
    OccMatrix tc = occ_table_periodic(w000111, v0011, max_m, max_r);

    auto closed = [](std::size_t m, std::size_t r) {
        return binomial(static_cast<std::int64_t>(m + r),
                        static_cast<std::int64_t>(m) - static_cast<std::int64_t>(r));
    };

    for (std::size_t m = 0; m <= max_m; ++m) {
        for (std::size_t r = 0; r <= max_r; ++r) {
            OccCount pow4 = OccCount(1) << (2 * r); // 4^r
            const OccCount cb = closed(m, r);
            rep.expect(ta.at(m, r) == pow4 * cb,
                       "a[" + std::to_string(m) + "][" + std::to_string(r) +
                           "] != 4^r binom(m+r, m-r): table " +
                           ta.at(m, r).str() + " closed " +
                           OccCount(pow4 * cb).str());
            rep.expect(tb.at(m, r) == cb,
                       "b[" + std::to_string(m) + "][" + std::to_string(r) +
                           "] != binom(m+r, m-r): table " + tb.at(m, r).str() +
                           " closed " + cb.str());
            rep.expect(ta.at(m, r) == pow4 * tb.at(m, r),
                       "a[" + std::to_string(m) + "][" + std::to_string(r) +
                           "] != 4^r b[m][r]");
        }
    }

    // c recurrence, read off the denominator (1-x)^4 - 9x(1+2x)^2 y:
    //   c(m,r) = 4c(m-1,r) - 6c(m-2,r) + 4c(m-3,r) - c(m-4,r)
    //          + 36c(m-3,r-1) + 36c(m-2,r-1) + 9c(m-1,r-1)
    // for m >= 1, r >= 1, with c = 0 at negative indices and c(m,0) = 1.
    // (Spot check: c(3,1) = 351 = 4*81 - 6*9 + 36 + 36 + 9.)
    auto c_at = [&](std::int64_t m, std::int64_t r) -> OccCount {
        if (m < 0 || r < 0) return OccCount(0);
        return tc.at(static_cast<std::size_t>(m), static_cast<std::size_t>(r));
    };
    for (std::size_t m = 0; m <= max_m; ++m)
        rep.expect(tc.at(m, 0) == 1,
                   "c[" + std::to_string(m) + "][0] != 1");
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(max_m); ++m) {
        for (std::int64_t r = 1; r <= static_cast<std::int64_t>(max_r); ++r) {
            const OccCount rhs = 4 * c_at(m - 1, r) - 6 * c_at(m - 2, r) +
                                 4 * c_at(m - 3, r) - c_at(m - 4, r) +
                                 36 * c_at(m - 3, r - 1) +
                                 36 * c_at(m - 2, r - 1) +
                                 9 * c_at(m - 1, r - 1);
            rep.expect(c_at(m, r) == rhs,
                       "c[" + std::to_string(m) + "][" + std::to_string(r) +
                           "] recurrence mismatch: table " + c_at(m, r).str() +
                           " recurrence " + rhs.str());
        }
    }
    return rep;
}

// Numeric per-letter entropy data for a periodic pair at a fixed power m:
// the best r for the supplied v, the bits per letter it yields, and the
// ratio r/m. A certified maxocc statement needs a structural result tying
// maximizers to powers of v; that exists for the three studied families.
struct PeriodicEstimate {
    std::size_t r_star = 0;
    OccCount max_count;
    double per_letter_bits = 0.0;
    double ratio = 0.0;
    bool certified = false;
};

inline PeriodicEstimate periodic_entropy_estimate(
    const Word& w, const Word& v, std::size_t m,
    std::uint64_t budget = kDefaultSeriesBudget) {
    if (w.empty() || v.empty() || m == 0)
        throw std::invalid_argument("periodic_entropy_estimate: empty input");
    const std::size_t nw = w.size(), nv = v.size();
    const std::size_t R = (m * nw) / nv; // longer powers of v cannot fit
    const std::uint64_t cost = static_cast<std::uint64_t>(m) * nw *
                               static_cast<std::uint64_t>(R ? R : 1) * nv;
    if (cost > budget)
        throw std::invalid_argument("periodic_entropy_estimate: budget exceeded");

    // Single DP sweep, final row only.
    const std::size_t plen = R * nv;
    std::vector<OccCount> dp(plen + 1);
    dp[0] = 1;
    for (std::size_t copy = 0; copy < m; ++copy)
        for (std::size_t i = 0; i < nw; ++i) {
            const int a = w.letter(i);
            for (std::size_t j = plen; j >= 1; --j)
                if (v.letter((j - 1) % nv) == a) dp[j] += dp[j - 1];
        }

    PeriodicEstimate est;
    est.max_count = dp[0]; // r = 0 gives 1
    for (std::size_t r = 1; r <= R; ++r) {
        if (dp[r * nv] > est.max_count) {
            est.max_count = dp[r * nv];
            est.r_star = r;
        }
    }
    est.per_letter_bits =
        log2_big(est.max_count) / (static_cast<double>(m) * nw);
    est.ratio = static_cast<double>(est.r_star) / static_cast<double>(m);
    const std::string ws = w.str(), vs = v.str();
    est.certified = (ws == "0011" && vs == "01") || (ws == "01" && vs == "01") ||
                    (ws == "000111" && vs == "0011");
    return est;
}

} // namespace subword
