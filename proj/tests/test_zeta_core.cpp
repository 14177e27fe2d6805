#include "doctest.h"

#include <cmath>
#include <random>

#include "support/brute_force.hpp"
#include "toruszeta/zeta_core.hpp"

using namespace toruszeta;

namespace {

const IntMatrix kCat{{2, 1}, {1, 1}};
const IntMatrix kSwap{{0, 1}, {1, 0}};
const IntMatrix kRotation{{0, -1}, {1, 0}};

std::vector<Rational> as_rationals(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
}

/// Random matrix from either family: generic entries or a forced eigenvalue +-1.
IntMatrix mixed_random(std::mt19937& rng, int trial) {
    return trial % 3 == 0 ? testing::random_unit_eigenvalue_matrix(rng) : testing::random_matrix_upto(rng);
}

}  // namespace

TEST_CASE("characteristic_polynomial") {
    CHECK(characteristic_polynomial(kCat) == IntPoly{1, -3, 1});
    CHECK(characteristic_polynomial(IntMatrix{{-1}}) == IntPoly{1, 1});
    CHECK(characteristic_polynomial(kRotation) == IntPoly{1, 0, 1});
}

TEST_CASE("char_factors") {
    for (long n : {-3L, 0L, 1L, 4L}) {
        const auto f = char_factors(IntMatrix{{n}}).factors;
        REQUIRE(f.size() == 2);
        CHECK(f[0] == IntPoly{1, -1});
        CHECK(f[1] == IntPoly{1, -n});
    }
    CHECK(char_factors(kCat).factors == std::vector<IntPoly>{{1, -1}, {1, -3, 1}, {1, -1}});
    CHECK(char_factors(IntMatrix(2)).factors == std::vector<IntPoly>{{1, -1}, {1}, {1}});
}

TEST_CASE("lefschetz_zeta") {
    for (long n : {-4L, -1L, 2L, 5L}) {
        CHECK(lefschetz_zeta(IntMatrix{{n}}) == make_ratfunc(IntPoly{1, -n}, IntPoly{1, -1}));
    }
    CHECK(lefschetz_zeta(IntMatrix{{1}}) == RatFunc::constant(1));
    CHECK(lefschetz_zeta(kCat) == make_ratfunc(IntPoly{1, -3, 1}, IntPoly{1, -2, 1}));
    CHECK(lefschetz_zeta(kSwap) == RatFunc::constant(1));
    const auto series = series_expand(log_derivative(lefschetz_zeta(kCat)), 2);
    CHECK(series == as_rationals({0, -1, -5}));
}

TEST_CASE("signed_count and isolated_fixed_count") {
    CHECK(signed_count(kCat, 1) == -1);
    CHECK(signed_count(kSwap, 2) == 0);
    for (long n = -5; n <= 5; ++n) {
        CHECK(signed_count(IntMatrix{{n}}, 1) == 1 - n);
    }
    const std::vector<long> cat_counts{1, 5, 16, 45, 121, 320, 841, 2205};
    for (std::size_t m = 1; m <= cat_counts.size(); ++m) {
        CHECK(isolated_fixed_count(kCat, m) == cat_counts[m - 1]);
    }
    CHECK(isolated_fixed_count(IntMatrix{{-1}}, 1) == 2);
    CHECK(isolated_fixed_count(IntMatrix{{-1}}, 2) == 0);
    for (unsigned m = 1; m <= 5; ++m) {
        CHECK(isolated_fixed_count(IntMatrix::identity(2), m) == 0);
    }
}

TEST_CASE("signs") {
    CHECK(signs(kCat) == SignData{0, 0, 1, -1});
    CHECK(signs(IntMatrix{{-1}}) == SignData{0, 1, 1, 1});
    CHECK(signs(kSwap) == SignData{1, 1, 1, 1});
    CHECK(signs(IntMatrix{{-2}}) == SignData{0, 0, -1, -1});
    CHECK(signs(IntMatrix{{3}}) == SignData{0, 0, 1, -1});
    CHECK(signs(IntMatrix::identity(3)).sigma == 3);
}

TEST_CASE("signs turn signed counts into isolated counts") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const IntMatrix m = mixed_random(rng, trial);
        const SignData s = signs(m);
        for (unsigned it = 1; it <= 6; ++it) {
            const Integer sign = (it % 2 == 1 ? s.delta : 1) * s.epsilon;
            CHECK(isolated_fixed_count(m, it) == sign * signed_count(m, it));
        }
    }
}

TEST_CASE("artin_mazur_zeta closed form in dimension one") {
    for (long n = -5; n <= 5; ++n) {
        if (n == 0) continue;
        const long sgn = n > 0 ? 1 : -1;
        const RatFunc expected = make_ratfunc(IntPoly{1, -sgn}, IntPoly{1, -std::labs(n)});
        CHECK(artin_mazur_zeta(IntMatrix{{n}}) == expected);
    }
    CHECK(artin_mazur_zeta(IntMatrix{{0}}) == make_ratfunc(IntPoly{1}, IntPoly{1, -1}));
    CHECK(artin_mazur_zeta(IntMatrix{{-1}}) == make_ratfunc(IntPoly{1, 0, -1}, IntPoly{1, -2, 1}));
}

TEST_CASE("artin_mazur_zeta examples") {
    const RatFunc cat = artin_mazur_zeta(kCat);
    CHECK(cat == make_ratfunc(IntPoly{1, -2, 1}, IntPoly{1, -3, 1}));
    CHECK(series_expand(log_derivative(cat), 4) == as_rationals({0, 1, 5, 16, 45}));
    CHECK(artin_mazur_zeta(kSwap) == RatFunc::constant(1));
    CHECK(artin_mazur_zeta(IntMatrix::identity(3)) == RatFunc::constant(1));
}

TEST_CASE("direct product form equals the composed form") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 120; ++trial) {
        const IntMatrix m = mixed_random(rng, trial);
        CHECK(artin_mazur_zeta_product(m) == artin_mazur_zeta(m));
    }
}

TEST_CASE("euler_exponents") {
    CHECK(euler_exponents(IntMatrix{{-1}}, 6) == std::vector<Integer>{2, -1, 0, 0, 0, 0});
    CHECK(euler_exponents(IntMatrix{{2}}, 6) == std::vector<Integer>{1, 1, 2, 3, 6, 9});
    CHECK(euler_exponents(IntMatrix::identity(2), 5) == std::vector<Integer>(5, 0));
    // cat map: prime cycles (1, 2, 5, 10, 24, 50)
    CHECK(euler_exponents(kCat, 6) == std::vector<Integer>{1, 2, 5, 10, 24, 50});
}

TEST_CASE("generating_function") {
    const RatFunc g = generating_function(IntMatrix{{2}});
    CHECK(g == make_ratfunc(IntPoly{0, 1}, IntPoly{1, -1} * IntPoly{1, -2}));
    CHECK(series_expand(g, 4) == as_rationals({0, 1, 3, 7, 15}));
    CHECK(generating_function(IntMatrix::identity(2)) == RatFunc());
    CHECK(series_expand(generating_function(kCat), 4) == as_rationals({0, 1, 5, 16, 45}));
}

TEST_CASE("series of the generating functions match the counts") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 80; ++trial) {
        const IntMatrix m = mixed_random(rng, trial);
        const auto tilde = series_expand(log_derivative(lefschetz_zeta(m)), 8);
        const auto plain = series_expand(generating_function(m), 8);
        CHECK(tilde[0] == 0);
        CHECK(plain[0] == 0);
        for (unsigned it = 1; it <= 8; ++it) {
            CHECK(tilde[it] == Rational(signed_count(m, it)));
            CHECK(plain[it] == Rational(isolated_fixed_count(m, it)));
        }
    }
}

TEST_CASE("growth_rate") {
    const auto two = growth_rate(IntMatrix{{2}});
    REQUIRE(two.has_value());
    CHECK(std::fabs(two->value - 2.0) <= 1e-9);
    CHECK(two->error_bound <= 1e-9);

    const auto cat = growth_rate(kCat);
    REQUIRE(cat.has_value());
    const double golden_square = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::fabs(cat->value - golden_square) <= 1e-9);

    CHECK_FALSE(growth_rate(IntMatrix::identity(2)).has_value());
    CHECK_FALSE(growth_rate(kSwap).has_value());
    // [[-1]]: generating function 2z/(1 - z^2), roots on the unit circle
    const auto minus_one = growth_rate(IntMatrix{{-1}});
    REQUIRE(minus_one.has_value());
    CHECK(std::fabs(minus_one->value - 1.0) <= 1e-9);
}

TEST_CASE("growth_rate bounds the counts") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix m = testing::random_matrix_upto(rng);
        const auto rate = growth_rate(m);
        if (!rate) {
            continue;
        }
        // a_m^(1/m) approaches the rate from below up to a polynomial factor
        const double a20 = isolated_fixed_count(m, 20).get_d();
        if (a20 > 0) {
            CHECK(std::pow(a20, 1.0 / 20.0) <= rate->value * std::pow(20.0 * m.dim(), 1.0 / 20.0) + 1e-6);
        }
    }
}

TEST_CASE("functional_equation_check") {
    for (long n = -5; n <= 5; ++n) {
        if (n == 0) continue;
        const auto r = functional_equation_check(IntMatrix{{n}});
        CHECK(r.det == n);
        CHECK(r.factor == n);
        CHECK(r.holds());
    }
    const auto cat = functional_equation_check(kCat);
    CHECK(cat.factor == 1);
    CHECK(cat.holds());
    CHECK(functional_equation_check(kSwap).holds());
    CHECK_THROWS_AS(functional_equation_check(IntMatrix{{1, 1}, {1, 1}}), std::domain_error);
}

TEST_CASE("functional equation on random nonsingular matrices") {
    std::mt19937 rng(35);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 80; ++trial) {
        const IntMatrix m = mixed_random(rng, trial);
        if (det_exact(m) == 0) continue;
        ++tested;
        CHECK(functional_equation_check(m).holds());
    }
    CHECK(tested == 80);
}

TEST_CASE("cyclotomic_polynomial") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    // x^n - 1 is the product over the divisors
    IntPoly product{1};
    for (unsigned k : {1u, 2u, 3u, 4u, 6u, 12u}) product = product * cyclotomic_polynomial(k);
    CHECK(product == IntPoly::monomial(1, 12) - IntPoly{1});
}

TEST_CASE("classify") {
    const auto cat = classify(kCat);
    CHECK_FALSE(cat.singular);
    CHECK(cat.root_of_unity_orders.empty());
    CHECK(cat.quasihyperbolic);
    CHECK(cat.hyperbolic == std::optional<bool>(true));
    CHECK(cat.hyperbolic_evidence == Evidence::Numeric);

    const auto swap = classify(kSwap);
    CHECK(swap.root_of_unity_orders == std::vector<unsigned>{1, 2});
    CHECK_FALSE(swap.quasihyperbolic);
    CHECK(swap.hyperbolic == std::optional<bool>(false));
    CHECK(swap.hyperbolic_evidence == Evidence::Exact);

    const auto rot = classify(kRotation);
    CHECK(rot.root_of_unity_orders == std::vector<unsigned>{4});
    CHECK_FALSE(rot.quasihyperbolic);

    // x^2 - 2: no self-reciprocal factor, so hyperbolicity is exact
    const auto sqrt2 = classify(IntMatrix{{0, 2}, {1, 0}});
    CHECK(sqrt2.hyperbolic == std::optional<bool>(true));
    CHECK(sqrt2.hyperbolic_evidence == Evidence::Exact);

    CHECK(classify(IntMatrix{{1, 1}, {1, 1}}).singular);
    // x^2 - x + 1 = Phi_6
    CHECK(classify(IntMatrix{{0, -1}, {1, 1}}).root_of_unity_orders == std::vector<unsigned>{6});
}

TEST_CASE("classify: unimodular eigenvalues that are not roots of unity") {
    // Salem quartic x^4 - x^3 - x^2 - x + 1: two real roots, two on the circle
    IntMatrix companion(4);
    companion(1, 0) = 1;
    companion(2, 1) = 1;
    companion(3, 2) = 1;
    companion(0, 3) = -1;
    companion(1, 3) = 1;
    companion(2, 3) = 1;
    companion(3, 3) = 1;
    CHECK(characteristic_polynomial(companion) == IntPoly{1, -1, -1, -1, 1});
    const auto report = classify(companion);
    CHECK(report.quasihyperbolic);
    CHECK(report.root_of_unity_orders.empty());
    CHECK_FALSE(report.hyperbolic.has_value());
    CHECK(report.hyperbolic_evidence == Evidence::Indeterminate);
}

TEST_CASE("make_report") {
    const ZetaReport r = make_report(kCat, 4);
    CHECK(r.matrix == kCat);
    CHECK(r.artin_mazur_zeta == artin_mazur_zeta(kCat));
    CHECK(r.lefschetz_zeta == lefschetz_zeta(kCat));
    CHECK(r.counts == std::vector<Integer>{1, 5, 16, 45});
    CHECK(r.signed_counts == std::vector<Integer>{-1, -5, -16, -45});
    CHECK(r.exponents == std::vector<Integer>{1, 2, 5, 10});
    CHECK(r.functional_equation_holds == std::optional<bool>(true));
    REQUIRE(r.growth_rate.has_value());

    const ZetaReport singular = make_report(IntMatrix{{1, 1}, {1, 1}}, 3);
    CHECK_FALSE(singular.functional_equation_holds.has_value());
}
