#include "siegel/diffops.hpp"
#include "siegel/padic.hpp"
#include "siegel/theta.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace siegel;
using siegel::testing::random_expansion;

namespace {

FourierExpansion theta_a2(long bound) { return rep_numbers(gram_a(2), 1, bound); }

} // namespace

TEST_CASE("Valuation ordering and arithmetic") {
    CHECK(Valuation(3) < Valuation::infinity());
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK(Valuation(-1) < Valuation(0));
    CHECK((Valuation::infinity() + 5).is_infinite());
    CHECK((Valuation(2) + 3) == Valuation(5));
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK(Valuation(-2).to_string() == "-2");
    CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
}

TEST_CASE("vp examples") {
    CHECK(vp(0, 3).is_infinite());
    for (long p : {3L, 5L, 7L, 11L}) CHECK(vp(p, p) == Valuation(1));
    CHECK(vp(Rational(6, 9), 3) == Valuation(-1));
    CHECK(vp(Rational(-54, 5), 3) == Valuation(3));
    CHECK(vp(Rational(1, 7), 5) == Valuation(0));
    CHECK_THROWS_AS(vp(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(vp(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(vp(1, 1), std::invalid_argument);
}

TEST_CASE("vp_expansion examples") {
    const auto th = theta_a2(4);
    CHECK(vp_expansion(th, 3) == Valuation(0));
    CHECK(vp_expansion(scale(3, th), 3) == Valuation(1));
    CHECK(vp_expansion(FourierExpansion(2, 2), 5).is_infinite());
}

TEST_CASE("vp_expansion is superadditive under mul") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 2;
        const auto f = scale(make_rational(9, 1 + trial % 4), random_expansion(rng, n, 2, -6, 6));
        const auto g = scale(Rational(1, 3), random_expansion(rng, n, 2, -6, 6));
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(vp_expansion(mul(f, g), 3) >= vp_expansion(f, 3) + vp_expansion(g, 3).value());
    }
}

TEST_CASE("congruent examples") {
    const auto th = theta_a2(4);
    const auto one = FourierExpansion::constant(1, 4);

    const auto same = congruent(th, th, 3, 5, false);
    CHECK(same.holds);
    CHECK(same.min_valuation.is_infinite());
    CHECK_FALSE(same.witness.has_value());

    const auto m1 = congruent(th, one, 3, 1, false);
    CHECK(m1.holds);
    CHECK(m1.min_valuation == Valuation(1));
    CHECK(m1.bound == 4);

    const auto m2 = congruent(th, one, 3, 2, false);
    CHECK_FALSE(m2.holds);
    CHECK(m2.min_valuation == Valuation(1));
    REQUIRE(m2.witness.has_value());
    CHECK(*m2.witness == index1(1));

    // Normalized mode adds nu_p(F).
    const auto scaled = scale(3, th);
    const auto normal = congruent(scaled, scale(3, one), 3, 1, true);
    CHECK(normal.offset == Valuation(1));
    CHECK(normal.min_valuation == Valuation(2));
    CHECK(normal.holds);
    CHECK_FALSE(congruent(scaled, scale(3, one), 3, 2, true).holds);

    // Common bound.
    CHECK(congruent(th, FourierExpansion::constant(1, 2), 3, 1, false).bound == 2);
    CHECK_THROWS_AS(congruent(th, FourierExpansion::constant(2, 2), 3, 1, false), std::invalid_argument);
}

TEST_CASE("congruent is an equivalence relation") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 2;
        const auto base = random_expansion(rng, n, 2, -5, 5);
        auto near = [&] { return add(base, scale(3, random_expansion(rng, n, 2, -2, 2, 0.3))); };
        const auto f = near();
        const auto g = trial % 3 == 0 ? random_expansion(rng, n, 2, -5, 5) : near();
        const auto h = near();
        CHECK(congruent(f, f, 3, 1, false).holds);
        CHECK(congruent(f, g, 3, 1, false).holds == congruent(g, f, 3, 1, false).holds);
        if (congruent(f, g, 3, 1, false).holds && congruent(g, h, 3, 1, false).holds)
            CHECK(congruent(f, h, 3, 1, false).holds);
    }
}

TEST_CASE("frobenius_descent examples") {
    const auto h = frobenius_descent(theta_a2(3), 3);
    CHECK(h.trace_bound() == 1);
    CHECK(h.scalar(1) == 234);
    CHECK(frobenius_descent(FourierExpansion::constant(2, 3), 3) == FourierExpansion::constant(2, 1));
    CHECK_THROWS_AS(frobenius_descent(FourierExpansion::from_series({1, Rational(1, 3)}), 3),
                    std::invalid_argument);
}

TEST_CASE("frobenius_descent is congruent to its input") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 2;
        const long p = trial % 2 == 0 ? 3 : 5;
        const auto g = random_expansion(rng, n, n == 1 ? 3 : 2 + trial % 2, -9, 9);
        CHECK(congruent(frobenius_descent(g, p), g, p, 1, false).holds);
    }
}

TEST_CASE("script_e examples") {
    const auto f = special_theta(3, 1, 4);
    CHECK(script_e(1, f, 1, 3) == f);
    const auto e2 = script_e(2, f, 1, 3);
    CHECK(e2.meta().weight == Rational(8));
    CHECK(e2 == pow(f, 4));
    for (int i = 1; i <= 3; ++i) {
        const auto one = FourierExpansion::constant(1, 4);
        CHECK(congruent(script_e(i, f, 1, 3), one, 3, 1, false).holds);
        CHECK(congruent(script_e(i, f, 2, 3), one, 3, 1, false).holds);
    }
    // Weight tag must be p - 1.
    CHECK_THROWS_AS(script_e(1, f, 1, 5), std::invalid_argument);
    auto not_one = FourierExpansion::from_series({1, 1});
    CHECK_THROWS_AS(script_e(1, not_one, 1, 3), std::invalid_argument);
}

TEST_CASE("powers of forms congruent to 1") {
    const auto f = special_theta(3, 1, 4);
    const auto one = FourierExpansion::constant(1, 4);
    long pi = 1;
    for (int i = 1; i <= 3; ++i) {
        CHECK(congruent(pow(script_e(i, f, 1, 3), pi), one, 3, i, false).holds);
        CHECK(congruent(pow(f, pi), one, 3, i, false).holds);
        pi *= 3;
    }
}

TEST_CASE("limit_profile examples") {
    const auto th = theta_a2(3);
    const auto profile = limit_profile({th, th, th}, th, 3);
    for (const auto& v : profile) CHECK(v.is_infinite());

    std::vector<FourierExpansion> seq;
    const auto q1 = FourierExpansion::from_series({0, 1, 0, 0});
    Rational pm = 1;
    for (int m = 0; m < 4; ++m) {
        seq.push_back(add(th, scale(pm, q1)));
        pm *= 3;
    }
    const auto lin = limit_profile(seq, th, 3);
    for (int m = 0; m < 4; ++m) CHECK(lin[m] == Valuation(m));

    std::vector<FourierExpansion> powers;
    unsigned long e = 1;
    for (int m = 0; m < 4; ++m) {
        powers.push_back(pow(th, e));
        e *= 3;
    }
    const auto growth = limit_profile(powers, FourierExpansion::constant(1, 3), 3);
    for (std::size_t i = 1; i < growth.size(); ++i) CHECK(growth[i - 1] < growth[i]);
    CHECK_THROWS_AS(limit_profile({}, th, 3), std::invalid_argument);
}

TEST_CASE("theorem41_check examples") {
    const auto e4 = eisenstein1(4, 4);
    const auto res = theorem41_check(e4, 4, 3, 1, 1, 1);
    CHECK(res.report.holds);
    CHECK(res.margin() >= Valuation(1));
    CHECK(res.weight_l == 2);
    CHECK(res.report.m == 1 + res.nu);

    const auto one = FourierExpansion::constant(1, 4);
    // The constant 1 has weight 0, so C_1(k) kills the remaining alpha = 0 term.
    const auto trivial = theorem41_check(one, 0, 3, 2, 1, 2);
    CHECK(trivial.report.holds);
    CHECK(trivial.report.min_valuation.is_infinite());

    const auto th2 = rep_numbers(gram_a(2), 2, 3);
    for (int r = 1; r <= 2; ++r) {
        const auto deg2 = theorem41_check(th2, 1, 3, 2, r, 2);
        CHECK(deg2.report.holds);
        CHECK(deg2.margin() >= Valuation(2));
    }
}

TEST_CASE("theorem41_check with an explicit F_{p-1}") {
    const auto e4 = eisenstein1(4, 3);
    const auto f = special_theta(3, 1, 3);
    const auto a = theorem41_check(e4, 4, 3, 1, 1, 1, f);
    const auto b = theorem41_check(e4, 4, 3, 1, 1, 1);
    CHECK(a.report.min_valuation == b.report.min_valuation);
    CHECK(a.bracket == b.bracket);
    CHECK_THROWS_AS(theorem41_check(e4, 4, 3, 1, 1, 1, special_theta(3, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(theorem41_check(e4, 4, 3, 1, 1, 1, FourierExpansion::from_series({1, 1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem41_check(e4, 4, 3, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("theorem41_check: larger dilation never lowers the valuation") {
    const auto e4 = eisenstein1(4, 4);
    const auto th2 = rep_numbers(gram_a(2), 2, 2);
    for (long m = 1; m <= 2; ++m) {
        Valuation prev(-1000);
        for (long md = 1; md <= 3; ++md) {
            const auto v = theorem41_check(e4, 4, 3, m, 1, md).report.min_valuation;
            CHECK(v >= prev);
            prev = v;
        }
        for (int r = 1; r <= 2; ++r) {
            Valuation prev2(-1000);
            for (long md = 1; md <= 3; ++md) {
                const auto v = theorem41_check(th2, 1, 3, m, r, md).report.min_valuation;
                CHECK(v >= prev2);
                prev2 = v;
            }
        }
    }
}
