#pragma once

// Exact bivariate polynomials over arbitrary-precision integers.
//
// The public BivariatePoly is a sparse monomial map in graded order (total
// degree, ties by y-degree). The elimination and GCD machinery works on
// dense recursive forms: a polynomial in y is a coefficient vector
// (YPoly), a polynomial in x over Z[y] is a vector of those (XYPoly).
// Determinants use fraction-free (Bareiss) elimination, whose divisions
// are exact in Z[x,y]; GCDs use integer/Z[y] content extraction plus a
// primitive pseudo-remainder sequence in the main variable.

#include "subword/bigint.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subword {

namespace poly {

using YPoly = std::vector<OccCount>;   // index = power of y; no trailing zeros
using XYPoly = std::vector<YPoly>;     // index = power of x; no trailing zeros

inline void trim(YPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(XYPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}
inline bool is_zero(const YPoly& p) { return p.empty(); }
inline bool is_zero(const XYPoly& p) { return p.empty(); }

inline YPoly y_add(const YPoly& a, const YPoly& b) {
    YPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}
inline YPoly y_sub(const YPoly& a, const YPoly& b) {
    YPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}
inline YPoly y_neg(YPoly a) {
    for (OccCount& c : a) c = -c;
    return a;
}
inline YPoly y_mul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}
inline YPoly y_scale(const YPoly& a, const OccCount& c) {
    if (c == 0) return {};
    YPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline OccCount y_content(const YPoly& a) {
    OccCount g = 0;
    for (const OccCount& c : a) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g; // 0 for the zero polynomial
}

// Exact division in Z[y]; throws if the division leaves a remainder.
inline YPoly y_exact_div(const YPoly& a, const YPoly& b) {
    if (b.empty())
        throw std::logic_error("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size())
        throw std::logic_error("inexact polynomial division");
    YPoly rem = a;
    YPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const OccCount& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        OccCount qc = top / b.back();
        if (qc * b.back() != top)
            throw std::logic_error("inexact polynomial division");
        q[k] = qc;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[k + i] -= qc * b[i];
    }
    trim(rem);
    if (!rem.empty())
        throw std::logic_error("inexact polynomial division");
    return q;
}

// Pseudo-remainder of a by b in y: lc(b)^(deg a - deg b + 1) * a mod b.
inline YPoly y_pseudo_rem(YPoly a, const YPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const OccCount top = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (OccCount& c : a) c *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= top * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline YPoly y_primitive(const YPoly& a) {
    if (a.empty()) return {};
    OccCount c = y_content(a);
    if (a.back() < 0) c = -c; // normalize sign: positive leading coefficient
    YPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / c;
    return r;
}

// GCD in Z[y] via primitive pseudo-remainder sequence; result has positive
// leading coefficient.
inline YPoly y_gcd(YPoly a, YPoly b) {
    // gcd(0, p) = |p|, content included.
    if (a.empty()) return b.empty() || b.back() > 0 ? b : y_neg(std::move(b));
    if (b.empty()) return a.back() > 0 ? a : y_neg(std::move(a));
    const OccCount c =
        boost::multiprecision::gcd(y_content(a), y_content(b));
    a = y_primitive(a);
    b = y_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        YPoly r = y_pseudo_rem(a, b);
        a = std::move(b);
        b = y_primitive(r);
    }
    return y_scale(a, c);
}

inline XYPoly xy_add(const XYPoly& a, const XYPoly& b) {
    XYPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const YPoly* pa = i < a.size() ? &a[i] : nullptr;
        const YPoly* pb = i < b.size() ? &b[i] : nullptr;
        if (pa && pb)
            r[i] = y_add(*pa, *pb);
        else if (pa)
            r[i] = *pa;
        else if (pb)
            r[i] = *pb;
    }
    trim(r);
    return r;
}
inline XYPoly xy_sub(const XYPoly& a, const XYPoly& b) {
    XYPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const YPoly* pa = i < a.size() ? &a[i] : nullptr;
        const YPoly* pb = i < b.size() ? &b[i] : nullptr;
        if (pa && pb)
            r[i] = y_sub(*pa, *pb);
        else if (pa)
            r[i] = *pa;
        else if (pb)
            r[i] = y_neg(*pb);
    }
    trim(r);
    return r;
}
inline XYPoly xy_mul(const XYPoly& a, const XYPoly& b) {
    if (a.empty() || b.empty()) return {};
    XYPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            r[i + j] = y_add(r[i + j], y_mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}
inline XYPoly xy_neg(XYPoly a) {
    for (YPoly& c : a) c = y_neg(std::move(c));
    return a;
}

// Exact division in Z[y][x]: classical long division in x whose leading
// coefficient divisions are exact in Z[y] whenever the full division is.
inline XYPoly xy_exact_div(const XYPoly& a, const XYPoly& b) {
    if (b.empty())
        throw std::logic_error("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size())
        throw std::logic_error("inexact polynomial division");
    XYPoly rem = a;
    XYPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        YPoly& top = rem[k + b.size() - 1];
        if (top.empty()) continue;
        YPoly qc = y_exact_div(top, b.back());
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[k + i] = y_sub(rem[k + i], y_mul(qc, b[i]));
        q[k] = std::move(qc);
    }
    trim(rem);
    if (!rem.empty())
        throw std::logic_error("inexact polynomial division");
    trim(q);
    return q;
}

inline YPoly xy_content(const XYPoly& a) {
    YPoly g;
    for (const YPoly& c : a) g = y_gcd(g, c);
    return g;
}

inline XYPoly xy_primitive(const XYPoly& a) {
    if (a.empty()) return {};
    YPoly c = xy_content(a);
    if (a.back().back() < 0) c = y_neg(std::move(c));
    XYPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].empty()) r[i] = y_exact_div(a[i], c);
    return r;
}

// Pseudo-remainder in x over Z[y].
inline XYPoly xy_pseudo_rem(XYPoly a, const XYPoly& b) {
    while (a.size() >= b.size()) {
        const YPoly top = a.back();
        const std::size_t shift = a.size() - b.size();
        for (YPoly& c : a) c = y_mul(c, b.back());
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = y_sub(a[shift + i], y_mul(top, b[i]));
        trim(a);
    }
    return a;
}

// GCD in Z[x,y]: contents in y come out first, then a primitive
// pseudo-remainder sequence runs in x.
inline XYPoly xy_gcd(XYPoly a, XYPoly b) {
    if (a.empty())
        return b.empty() || b.back().back() > 0 ? b : xy_neg(std::move(b));
    if (b.empty()) return a.back().back() > 0 ? a : xy_neg(std::move(a));
    YPoly c = y_gcd(xy_content(a), xy_content(b));
    a = xy_primitive(a);
    b = xy_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        XYPoly r = xy_pseudo_rem(a, b);
        a = std::move(b);
        b = r.empty() ? XYPoly{} : xy_primitive(r);
    }
    // Multiply the content gcd back in.
    XYPoly g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) g[i] = y_mul(a[i], c);
    return g;
}

// Fraction-free determinant with row swaps; entries are consumed.
inline XYPoly xy_det_bareiss(std::vector<std::vector<XYPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return XYPoly{YPoly{OccCount(1)}};
    bool negate = false;
    XYPoly prev{YPoly{OccCount(1)}};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m[r][k])) ++r;
            if (r == n) return {}; // singular
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                XYPoly t = xy_sub(xy_mul(m[i][j], m[k][k]),
                                  xy_mul(m[i][k], m[k][j]));
                m[i][j] = t.empty() ? XYPoly{} : xy_exact_div(t, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return negate ? xy_neg(std::move(m[n - 1][n - 1])) : std::move(m[n - 1][n - 1]);
}

} // namespace poly

// Sparse bivariate polynomial in graded monomial order (total degree,
// ties by y-degree); the canonical order for text and JSON forms.
class BivariatePoly {
public:
    struct Monomial {
        std::uint32_t dx = 0, dy = 0;
        bool operator<(const Monomial& o) const {
            const std::uint64_t da = std::uint64_t(dx) + dy;
            const std::uint64_t db = std::uint64_t(o.dx) + o.dy;
            if (da != db) return da < db;
            return dy < o.dy;
        }
        bool operator==(const Monomial& o) const {
            return dx == o.dx && dy == o.dy;
        }
    };
    using TermMap = std::map<Monomial, OccCount>;

    BivariatePoly() = default;
    static BivariatePoly constant(OccCount c) {
        BivariatePoly p;
        p.set(0, 0, std::move(c));
        return p;
    }
    static BivariatePoly variable_x() {
        BivariatePoly p;
        p.set(1, 0, 1);
        return p;
    }
    static BivariatePoly variable_y() {
        BivariatePoly p;
        p.set(0, 1, 1);
        return p;
    }

    void set(std::uint32_t dx, std::uint32_t dy, OccCount c) {
        if (c == 0)
            terms_.erase(Monomial{dx, dy});
        else
            terms_[Monomial{dx, dy}] = std::move(c);
    }
    void add_term(std::uint32_t dx, std::uint32_t dy, const OccCount& c) {
        if (c == 0) return;
        const Monomial m{dx, dy};
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    OccCount coeff(std::uint32_t dx, std::uint32_t dy) const {
        auto it = terms_.find(Monomial{dx, dy});
        return it == terms_.end() ? OccCount(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::uint32_t degree_x() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
        return d;
    }
    std::uint32_t degree_y() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
        return d;
    }

    BivariatePoly operator+(const BivariatePoly& o) const {
        BivariatePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m.dx, m.dy, c);
        return r;
    }
    BivariatePoly operator-(const BivariatePoly& o) const {
        BivariatePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m.dx, m.dy, -c);
        return r;
    }
    BivariatePoly operator-() const {
        BivariatePoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    BivariatePoly operator*(const BivariatePoly& o) const {
        BivariatePoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(ma.dx + mb.dx, ma.dy + mb.dy, ca * cb);
        return r;
    }
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    poly::XYPoly to_xy() const {
        poly::XYPoly p(degree_x() + 1);
        for (const auto& [m, c] : terms_) {
            if (p[m.dx].size() <= m.dy) p[m.dx].resize(m.dy + 1);
            p[m.dx][m.dy] = c;
        }
        poly::trim(p);
        for (poly::YPoly& c : p) poly::trim(c);
        return p;
    }
    static BivariatePoly from_xy(const poly::XYPoly& p) {
        BivariatePoly r;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p[i].size(); ++j)
                if (p[i][j] != 0)
                    r.terms_[Monomial{static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j)}] = p[i][j];
        return r;
    }

    // Largest integer dividing every coefficient (0 for the zero poly).
    OccCount content() const {
        OccCount g = 0;
        for (const auto& [m, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    // "1 - 2*x + x^2 - 4*x*y" in graded order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool neg = c < 0;
            OccCount mag = neg ? OccCount(-c) : c;
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string vars;
            if (m.dx > 0) {
                vars += 'x';
                if (m.dx > 1) vars += '^' + std::to_string(m.dx);
            }
            if (m.dy > 0) {
                if (!vars.empty()) vars += '*';
                vars += 'y';
                if (m.dy > 1) vars += '^' + std::to_string(m.dy);
            }
            if (vars.empty()) {
                out += mag.str();
            } else {
                if (mag != 1) {
                    out += mag.str();
                    out += '*';
                }
                out += vars;
            }
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [m, c] : terms_) arr.push_back({m.dx, m.dy, c.str()});
        return arr;
    }
    static BivariatePoly from_json(const nlohmann::json& arr) {
        BivariatePoly p;
        for (const auto& t : arr)
            p.add_term(t.at(0).get<std::uint32_t>(), t.at(1).get<std::uint32_t>(),
                       OccCount(t.at(2).get<std::string>()));
        return p;
    }

private:
    TermMap terms_;
};

inline BivariatePoly pow(const BivariatePoly& base, unsigned e) {
    BivariatePoly r = BivariatePoly::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

} // namespace subword
