#include "doctest.h"

#include <random>

#include "support/brute_force.hpp"
#include "toruszeta/linalg_exact.hpp"

using namespace toruszeta;

namespace {
const IntMatrix kCat{{2, 1}, {1, 1}};
}

TEST_CASE("mat_mul") {
    CHECK(IntMatrix::identity(2) * kCat == kCat);
    CHECK(mat_mul(kCat, kCat) == IntMatrix{{5, 3}, {3, 2}});
    CHECK(IntMatrix{{0}} * IntMatrix{{7}} == IntMatrix{{0}});
    CHECK_THROWS_AS(mat_mul(kCat, IntMatrix{{1}}), std::invalid_argument);
}

TEST_CASE("mat_pow") {
    CHECK(mat_pow(kCat, 0) == IntMatrix::identity(2));
    CHECK(mat_pow(kCat, 3) == IntMatrix{{13, 8}, {8, 5}});
    CHECK(mat_pow(IntMatrix{{-1}}, 2) == IntMatrix{{1}});
}

TEST_CASE("mat_pow is additive in the exponent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix m = testing::random_matrix_upto(rng);
        const unsigned i = rng() % 6;
        const unsigned j = rng() % 6;
        CHECK(mat_pow(m, i + j) == mat_pow(m, i) * mat_pow(m, j));
    }
}

TEST_CASE("det_exact") {
    CHECK(det_exact(IntMatrix::identity(3)) == 1);
    CHECK(det_exact(IntMatrix{{-1, -1}, {-1, 0}}) == -1);
    CHECK(det_exact(IntMatrix{{-4, -3}, {-3, -1}}) == -5);
    // zero leading pivot forces a row exchange
    CHECK(det_exact(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
    CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = testing::random_matrix(rng, 1 + rng() % 5, -9, 9);
        CHECK(det_exact(m) == testing::laplace_det(m));
    }
}

TEST_CASE("det_exact handles entries beyond 64 bits") {
    IntMatrix m(2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = Integer("98765432109876543210");
    m(1, 0) = 3;
    m(1, 1) = Integer("-1000000000000000000000");
    CHECK(det_exact(m) == testing::laplace_det(m));
}

TEST_CASE("sorted_subsets") {
    const auto s = sorted_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<std::size_t>{0, 1});
    CHECK(s[2] == std::vector<std::size_t>{0, 3});
    CHECK(s.back() == std::vector<std::size_t>{2, 3});
    CHECK(sorted_subsets(3, 0).size() == 1);
}

TEST_CASE("exterior_power") {
    CHECK(exterior_power(kCat, 0) == IntMatrix{{1}});
    CHECK(exterior_power(kCat, 1) == kCat);
    CHECK(exterior_power(kCat, 2) == IntMatrix{{1}});
    CHECK_THROWS_AS(exterior_power(kCat, 3), std::invalid_argument);

    // order-2 compound of a 3x3 matrix, minors worked out by hand
    const IntMatrix a{{1, 2, 0}, {0, 1, 3}, {2, 0, 1}};
    const IntMatrix expected{{1, 3, 6}, {-4, 1, 2}, {-2, -6, 1}};
    CHECK(exterior_power(a, 2) == expected);
}

TEST_CASE("exterior powers are functorial (Cauchy-Binet)") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + rng() % 4;
        const IntMatrix a = testing::random_matrix(rng, d);
        const IntMatrix b = testing::random_matrix(rng, d);
        for (std::size_t k = 0; k <= d; ++k) {
            CHECK(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k));
        }
        CHECK(exterior_power(a, d)(0, 0) == det_exact(a));
    }
}

namespace {

void check_smith(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(det_exact(s.left)) == 1);
    CHECK(abs(det_exact(s.right)) == 1);
    Integer product = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j) {
                CHECK(s.diagonal(i, j) == 0);
            }
        }
        CHECK(s.diagonal(i, i) >= 0);
        if (i + 1 < m.dim()) {
            const Integer& a = s.diagonal(i, i);
            const Integer& b = s.diagonal(i + 1, i + 1);
            // divisibility chain with zeros trailing
            CHECK((a == 0 ? b == 0 : mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0));
        }
        product *= s.diagonal(i, i);
    }
    CHECK(product == abs(det_exact(m)));
}

}  // namespace

TEST_CASE("smith_normal_form") {
    const SmithForm id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.left == IntMatrix::identity(2));
    CHECK(id.diagonal == IntMatrix::identity(2));
    CHECK(id.right == IntMatrix::identity(2));

    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 4}}).diagonal == IntMatrix{{2, 0}, {0, 4}});
    CHECK(smith_normal_form(IntMatrix{{-1, -1}, {-1, 0}}).diagonal == IntMatrix::identity(2));
    // diag(4, 6) is not a chain; the canonical form is diag(2, 12)
    CHECK(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}).diagonal == IntMatrix{{2, 0}, {0, 12}});
    CHECK(smith_normal_form(IntMatrix(3)).diagonal == IntMatrix(3));
    check_smith(IntMatrix{{0, 0}, {0, 5}});
}

TEST_CASE("smith_normal_form properties on random matrices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        check_smith(testing::random_matrix(rng, 1 + rng() % 4, -6, 6));
    }
}
