#include "subword/polynomial.hpp"

#include "catch_amalgamated.hpp"

#include <random>
#include <vector>

using namespace subword;
using namespace subword::poly;

namespace {

YPoly make_y(std::initializer_list<int> cs) {
    YPoly p;
    for (int c : cs) p.push_back(OccCount(c));
    trim(p);
    return p;
}

XYPoly make_xy(std::initializer_list<std::initializer_list<int>> rows) {
    XYPoly p;
    for (const auto& r : rows) p.push_back(make_y(r));
    trim(p);
    return p;
}

YPoly random_y(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-max_abs, max_abs);
    YPoly p(static_cast<std::size_t>(deg(rng)) + 1);
    for (OccCount& c : p) c = coef(rng);
    trim(p);
    return p;
}

XYPoly random_xy(std::mt19937& rng, int max_dx, int max_dy, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_dx);
    XYPoly p(static_cast<std::size_t>(deg(rng)) + 1);
    for (YPoly& c : p) c = random_y(rng, max_dy, max_abs);
    trim(p);
    return p;
}

// Laplace expansion along the first row; exponential, fine for k <= 4.
XYPoly det_oracle(const std::vector<std::vector<XYPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return XYPoly{YPoly{OccCount(1)}};
    if (n == 1) return m[0][0];
    XYPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<XYPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<XYPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const XYPoly t = xy_mul(m[0][j], det_oracle(minor));
        acc = (j % 2 == 0) ? xy_add(acc, t) : xy_sub(acc, t);
    }
    return acc;
}

} // namespace

TEST_CASE("univariate ring identities on random polynomials") {
    std::mt19937 rng(20240813);
    for (int it = 0; it < 200; ++it) {
        const YPoly a = random_y(rng, 6, 9);
        const YPoly b = random_y(rng, 6, 9);
        const YPoly c = random_y(rng, 6, 9);
        CHECK(y_add(a, b) == y_add(b, a));
        CHECK(y_mul(a, b) == y_mul(b, a));
        CHECK(y_add(y_add(a, b), c) == y_add(a, y_add(b, c)));
        CHECK(y_mul(a, y_add(b, c)) == y_add(y_mul(a, b), y_mul(a, c)));
        CHECK(is_zero(y_sub(a, a)));
        CHECK(y_neg(y_neg(a)) == a);
        CHECK(y_sub(a, b) == y_add(a, y_neg(b)));
    }
}

TEST_CASE("bivariate ring identities on random polynomials") {
    std::mt19937 rng(20240814);
    for (int it = 0; it < 120; ++it) {
        const XYPoly a = random_xy(rng, 4, 3, 9);
        const XYPoly b = random_xy(rng, 4, 3, 9);
        const XYPoly c = random_xy(rng, 4, 3, 9);
        CHECK(xy_mul(a, b) == xy_mul(b, a));
        CHECK(xy_add(xy_sub(a, b), b) == a);
        CHECK(xy_mul(a, xy_add(b, c)) == xy_add(xy_mul(a, b), xy_mul(a, c)));
        CHECK(is_zero(xy_sub(a, a)));
        CHECK(xy_neg(xy_neg(a)) == a);
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(20240815);
    for (int it = 0; it < 150; ++it) {
        YPoly a = random_y(rng, 5, 9);
        YPoly b = random_y(rng, 5, 9);
        while (is_zero(b)) b = random_y(rng, 5, 9);
        CHECK(y_exact_div(y_mul(a, b), b) == a);

        XYPoly xa = random_xy(rng, 3, 3, 6);
        XYPoly xb = random_xy(rng, 3, 3, 6);
        while (is_zero(xb)) xb = random_xy(rng, 3, 3, 6);
        CHECK(xy_exact_div(xy_mul(xa, xb), xb) == xa);
    }
}

TEST_CASE("inexact division throws") {
    CHECK_THROWS_AS(y_exact_div(make_y({1, 1}), make_y({2})),
                    std::logic_error);
    CHECK_THROWS_AS(y_exact_div(make_y({1, 1}), make_y({1, 1, 1})),
                    std::logic_error);
    CHECK_THROWS_AS(y_exact_div(make_y({1}), YPoly{}), std::logic_error);
    // x + 1 does not divide x^2 + 1.
    CHECK_THROWS_AS(xy_exact_div(make_xy({{1}, {}, {1}}), make_xy({{1}, {1}})),
                    std::logic_error);
    CHECK_THROWS_AS(xy_exact_div(make_xy({{1}}), XYPoly{}), std::logic_error);
}

TEST_CASE("gcd divides both inputs and recovers planted factors") {
    std::mt19937 rng(20240816);
    for (int it = 0; it < 60; ++it) {
        const YPoly a = random_y(rng, 4, 5);
        const YPoly b = random_y(rng, 4, 5);
        YPoly g0 = random_y(rng, 3, 5);
        while (is_zero(g0)) g0 = random_y(rng, 3, 5);
        const YPoly g = y_gcd(y_mul(a, g0), y_mul(b, g0));
        if (is_zero(a) && is_zero(b)) {
            CHECK(is_zero(g));
            continue;
        }
        // g is a common divisor and is itself divisible by the planted g0.
        if (!is_zero(a)) CHECK_NOTHROW(y_exact_div(y_mul(a, g0), g));
        if (!is_zero(b)) CHECK_NOTHROW(y_exact_div(y_mul(b, g0), g));
        CHECK_NOTHROW(y_exact_div(g, g0));
        CHECK(g.back() > 0);
    }
}

TEST_CASE("bivariate gcd keeps integer and y-contents") {
    CHECK(y_gcd(make_y({4}), make_y({6})) == make_y({2}));
    CHECK(y_gcd(make_y({2, 2}), YPoly{}) == make_y({2, 2}));
    CHECK(y_gcd(YPoly{}, make_y({-3})) == make_y({3}));
    CHECK(is_zero(y_gcd(YPoly{}, YPoly{})));
    // gcd(2 + 2x, 4 + 4x) = 2 + 2x.
    CHECK(xy_gcd(make_xy({{2}, {2}}), make_xy({{4}, {4}})) ==
          make_xy({{2}, {2}}));

    std::mt19937 rng(20240817);
    for (int it = 0; it < 40; ++it) {
        XYPoly a = random_xy(rng, 2, 2, 4);
        XYPoly b = random_xy(rng, 2, 2, 4);
        XYPoly g0 = random_xy(rng, 2, 2, 4);
        while (is_zero(g0)) g0 = random_xy(rng, 2, 2, 4);
        while (is_zero(a)) a = random_xy(rng, 2, 2, 4);
        while (is_zero(b)) b = random_xy(rng, 2, 2, 4);
        const XYPoly g = xy_gcd(xy_mul(a, g0), xy_mul(b, g0));
        CHECK_NOTHROW(xy_exact_div(xy_mul(a, g0), g));
        CHECK_NOTHROW(xy_exact_div(xy_mul(b, g0), g));
        CHECK_NOTHROW(xy_exact_div(g, g0));
    }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937 rng(20240818);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (int it = 0; it < 25; ++it) {
            std::vector<std::vector<XYPoly>> m(k, std::vector<XYPoly>(k));
            for (auto& row : m)
                for (XYPoly& e : row) e = random_xy(rng, 2, 1, 3);
            CHECK(xy_det_bareiss(m) == det_oracle(m));
        }
    }
}

TEST_CASE("bareiss determinant special cases") {
    CHECK(xy_det_bareiss({}) == make_xy({{1}}));
    CHECK(xy_det_bareiss({{make_xy({{7}, {1}})}}) == make_xy({{7}, {1}}));

    // Repeated rows are singular.
    const XYPoly a = make_xy({{1, 2}, {3}});
    const XYPoly b = make_xy({{0, 1}});
    CHECK(is_zero(xy_det_bareiss({{a, a}, {b, b}})));
    CHECK(is_zero(xy_det_bareiss({{XYPoly{}, XYPoly{}}, {a, b}})));

    // Zero pivot forces a row swap and a sign flip.
    const XYPoly one = make_xy({{1}});
    CHECK(xy_det_bareiss({{XYPoly{}, one}, {one, XYPoly{}}}) ==
          make_xy({{-1}}));
}

TEST_CASE("sparse polynomial term order and formatting") {
    BivariatePoly p;
    p.set(0, 0, 1);
    p.set(1, 0, -2);
    p.set(2, 0, 1);
    p.set(1, 1, -4);
    CHECK(p.str() == "1 - 2*x + x^2 - 4*x*y");

    std::vector<BivariatePoly::Monomial> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m);
    REQUIRE(order.size() == 4);
    CHECK(order[0] == BivariatePoly::Monomial{0, 0});
    CHECK(order[1] == BivariatePoly::Monomial{1, 0});
    CHECK(order[2] == BivariatePoly::Monomial{2, 0}); // grade 2: x^2 before x*y
    CHECK(order[3] == BivariatePoly::Monomial{1, 1});

    CHECK(BivariatePoly().str() == "0");
    CHECK(BivariatePoly::constant(-3).str() == "-3");
    CHECK(BivariatePoly::variable_y().str() == "y");
    CHECK(p.degree_x() == 2);
    CHECK(p.degree_y() == 1);
    CHECK(p.coeff(1, 1) == -4);
    CHECK(p.coeff(5, 5) == 0);
}

TEST_CASE("sparse polynomial arithmetic agrees with dense arithmetic") {
    std::mt19937 rng(20240819);
    for (int it = 0; it < 60; ++it) {
        const XYPoly a = random_xy(rng, 3, 3, 9);
        const XYPoly b = random_xy(rng, 3, 3, 9);
        const BivariatePoly sa = BivariatePoly::from_xy(a);
        const BivariatePoly sb = BivariatePoly::from_xy(b);
        CHECK((sa * sb).to_xy() == xy_mul(a, b));
        CHECK((sa + sb).to_xy() == xy_add(a, b));
        CHECK((sa - sb).to_xy() == xy_sub(a, b));
        CHECK(BivariatePoly::from_xy(sa.to_xy()) == sa);
    }
}

TEST_CASE("sparse polynomial json round-trip and cancellation") {
    BivariatePoly p;
    p.set(0, 0, 1);
    p.set(3, 2, OccCount("-123456789012345678901234567890"));
    CHECK(BivariatePoly::from_json(p.to_json()) == p);
    CHECK(BivariatePoly::from_json(BivariatePoly().to_json()).is_zero());

    BivariatePoly q;
    q.add_term(1, 1, 5);
    q.add_term(1, 1, -5);
    CHECK(q.is_zero());

    CHECK(p.content() == 1);
    BivariatePoly r;
    r.set(0, 1, 6);
    r.set(2, 0, -9);
    CHECK(r.content() == 3);
}

TEST_CASE("sparse polynomial powers") {
    const BivariatePoly x = BivariatePoly::variable_x();
    const BivariatePoly y = BivariatePoly::variable_y();
    const BivariatePoly one = BivariatePoly::constant(1);
    const BivariatePoly s = one + x + y;
    CHECK(pow(s, 0) == one);
    CHECK(pow(s, 1) == s);
    CHECK(pow(s, 2) == s * s);
    const BivariatePoly sq = pow(s, 2);
    CHECK(sq.coeff(0, 0) == 1);
    CHECK(sq.coeff(1, 0) == 2);
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(2, 0) == 1);
}
