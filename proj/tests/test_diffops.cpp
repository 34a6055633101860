#include "oracles.hpp"
#include "siegel/diffops.hpp"
#include "siegel/padic.hpp"
#include "siegel/theta.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace siegel;
using siegel::testing::random_expansion;
using siegel::testing::t2;

namespace {

RationalMatrix random_half_symmetric(std::mt19937& rng, std::size_t n) {
    auto m = to_rational(oracle::random_symmetric(rng, n, -4, 4));
    m *= Rational(1, 2);
    return m;
}

} // namespace

TEST_CASE("BracketParams validation") {
    CHECK_NOTHROW(BracketParams{2, 2, 4, 6}.validate());
    CHECK_THROWS_AS(BracketParams({2, 3, 4, 6}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(BracketParams({2, 0, 4, 6}).validate(), std::invalid_argument);
}

TEST_CASE("theta_r examples") {
    const auto f = FourierExpansion::from_series({1, 6, 0, 6, 6});
    const auto th = theta_r(f, 1);
    CHECK(th.shape() == Shape::compound(1));
    for (long t = 0; t <= 4; ++t) CHECK(th.coefficient(index1(t))(0, 0) == t * f.scalar(t));

    CHECK(theta_r(FourierExpansion::constant(2, 3), 1).is_zero());
    CHECK(theta_r(FourierExpansion::constant(2, 3), 2).is_zero());

    FourierExpansion single(2, 2);
    single.set(t2(2, 1, 2), Rational(1));
    CHECK(theta_r(single, 2).coefficient(t2(2, 1, 2))(0, 0) == Rational(3, 4));
    const auto th1 = theta_r(single, 1).coefficient(t2(2, 1, 2));
    CHECK(th1 == t2(2, 1, 2).as_rational());

    CHECK_THROWS_AS(theta_r(single, 3), std::invalid_argument);
    CHECK_THROWS_AS(theta_r(th, 1), std::invalid_argument);
}

TEST_CASE("c_poly examples") {
    CHECK(c_poly(0, Rational(7, 3)) == 1);
    CHECK(c_poly(1, Rational(7, 3)) == Rational(7, 3));
    CHECK(c_poly(2, 4) == 18);
    CHECK(c_poly(3, Rational(1)) == Rational(1) * Rational(3, 2) * Rational(2));
    CHECK(c_poly(2, Rational(-1, 2)) == 0);
}

TEST_CASE("lambda_compound_coeffs examples") {
    std::mt19937 rng(31);
    const auto r = random_half_symmetric(rng, 3);
    const auto s = random_half_symmetric(rng, 3);
    const auto c1 = lambda_compound_coeffs(r, s, 1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == r);
    CHECK(c1[1] == s);

    const auto r2 = random_half_symmetric(rng, 2);
    const auto s2 = random_half_symmetric(rng, 2);
    const auto c2 = lambda_compound_coeffs(r2, s2, 2);
    REQUIRE(c2.size() == 3);
    const Rational expected =
        r2(0, 0) * s2(1, 1) + s2(0, 0) * r2(1, 1) - Rational(2) * r2(0, 1) * s2(0, 1);
    CHECK(c2[1](0, 0) == expected);
    CHECK(c2[0](0, 0) == determinant(r2));
    CHECK(c2[2](0, 0) == determinant(s2));

    const RationalMatrix zero(3, 3);
    for (int order = 1; order <= 3; ++order) {
        const auto cz = lambda_compound_coeffs(r, zero, order);
        CHECK(cz[0] == compound(r, order));
        for (int i = 1; i <= order; ++i) CHECK(cz[i].is_zero());
    }
    CHECK_THROWS_AS(lambda_compound_coeffs(r, r2, 1), std::invalid_argument);
}

TEST_CASE("polarization consistency at integer points") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 4;
        const auto r = random_half_symmetric(rng, n);
        const auto s = random_half_symmetric(rng, n);
        for (int order = 1; order <= n; ++order) {
            const auto coeffs = lambda_compound_coeffs(r, s, order);
            for (long lam = -2; lam <= 2; ++lam) {
                RationalMatrix acc = coeffs[0];
                Rational power = 1;
                for (int i = 1; i <= order; ++i) {
                    power *= lam;
                    acc = acc + coeffs[i] * power;
                }
                CHECK(acc == compound(r + s * Rational(lam), order));
            }
        }
    }
}

TEST_CASE("swap symmetry of polarization") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const auto r = random_half_symmetric(rng, n);
        const auto s = random_half_symmetric(rng, n);
        for (int order = 1; order <= n; ++order) {
            const auto rs = lambda_compound_coeffs(r, s, order);
            const auto sr = lambda_compound_coeffs(s, r, order);
            for (int i = 0; i <= order; ++i) CHECK(rs[i] == sr[order - i]);
        }
    }
}

TEST_CASE("bracket_weights layout") {
    const auto w = bracket_weights({1, 1, 4, 6});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == 4);
    CHECK(w[1] == -6);
    const auto w2 = bracket_weights({2, 2, Rational(5), Rational(7, 2)});
    CHECK(w2[2] == c_poly(2, Rational(3)));
    CHECK(w2[0] == c_poly(2, Rational(9, 2)));
}

TEST_CASE("classical bracket of E4 and E6") {
    const auto e4 = eisenstein1(4, 8);
    const auto e6 = eisenstein1(6, 8);
    const auto d = rc_bracket(e4, e6, {1, 1, 4, 6});
    CHECK(d.shape() == Shape::compound(1));
    CHECK(d.coefficient(index1(1))(0, 0) == -3456);
    const auto delta = delta1(8);
    for (long t = 0; t <= 8; ++t) CHECK(d.coefficient(index1(t))(0, 0) == Rational(-3456) * delta.scalar(t));
}

TEST_CASE("bracket with constants") {
    std::mt19937 rng(37);
    const auto f = random_expansion(rng, 2, 2, -5, 5);
    const auto one = FourierExpansion::constant(2, 2);
    for (int r = 1; r <= 2; ++r) {
        const BracketParams params{2, r, Rational(5), Rational(3, 2)};
        const auto expected = scale(bracket_weights(params)[r], theta_r(f, r));
        CHECK(rc_bracket(f, one, params) == expected);
        CHECK(p0_part(f, one, params) == expected);
        CHECK(rc_bracket(one, one, params).is_zero());
        CHECK(p0_part(one, f, params).is_zero());
    }
}

TEST_CASE("p0_part degree-one formula") {
    std::mt19937 rng(39);
    const auto f = random_expansion(rng, 1, 5, -5, 5);
    const auto g = random_expansion(rng, 1, 5, -5, 5);
    const auto p0 = p0_part(f, g, {1, 1, 4, 6});
    for (long t = 0; t <= 5; ++t) {
        Rational expected = 0;
        for (long t1 = 0; t1 <= t; ++t1) expected += Rational(t1) * f.scalar(t1) * g.scalar(t - t1);
        CHECK(p0.coefficient(index1(t))(0, 0) == Rational(-6) * expected);
    }
}

TEST_CASE("bracket antisymmetry") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 2;
        const long bound = 1 + trial % 2;
        const auto f = random_expansion(rng, n, bound, -4, 4);
        const auto g = random_expansion(rng, n, bound, -4, 4);
        const Rational k = make_rational(3 + trial % 5, 1 + trial % 2);
        const Rational l(2 + trial % 7, 1);
        for (int r = 1; r <= n; ++r) {
            const auto lhs = rc_bracket(f, g, {n, r, k, l});
            const auto rhs = scale(r % 2 == 0 ? 1 : -1, rc_bracket(g, f, {n, r, l, k}));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bracket is bilinear") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 2;
        const auto f1 = random_expansion(rng, n, 2, -4, 4);
        const auto f2 = random_expansion(rng, n, 2, -4, 4);
        const auto g = random_expansion(rng, n, 2, -4, 4);
        const Rational a = make_rational(trial - 5, 3);
        for (int r = 1; r <= n; ++r) {
            const BracketParams params{n, r, 4, 6};
            CHECK(rc_bracket(add(f1, scale(a, f2)), g, params) ==
                  add(rc_bracket(f1, g, params), scale(a, rc_bracket(f2, g, params))));
            CHECK(rc_bracket(g, add(f1, scale(a, f2)), params) ==
                  add(rc_bracket(g, f1, params), scale(a, rc_bracket(g, f2, params))));
        }
    }
}

TEST_CASE("P0 extraction: derivatives of g carry the p-power") {
    std::mt19937 rng(45);
    const long p = 3;
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 2;
        const long m = 1 + trial % 3;
        const auto f = random_expansion(rng, n, 2, -6, 6);
        auto tail = random_expansion(rng, n, 2, -6, 6);
        tail.set(HalfIntegralMatrix::zero(n), Rational(0));
        Rational pm = 1;
        for (long i = 0; i < m; ++i) pm *= p;
        const auto g = add(FourierExpansion::constant(n, 2), scale(pm, tail));
        for (int r = 1; r <= n; ++r) {
            const BracketParams params{n, r, 4, 2};
            const auto diff = subtract(rc_bracket(f, g, params), p0_part(f, g, params));
            CHECK(vp_expansion(diff, p) >= Valuation(m));
        }
    }
}

TEST_CASE("bracket input validation") {
    const auto f = FourierExpansion::constant(2, 1);
    CHECK_THROWS_AS(rc_bracket(f, FourierExpansion::constant(1, 1), {2, 1, 4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(rc_bracket(f, f, {1, 1, 4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(rc_bracket(f, f, {2, 3, 4, 6}), std::invalid_argument);
}
