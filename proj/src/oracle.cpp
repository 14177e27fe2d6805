#include "toruszeta/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace toruszeta::oracle {

namespace {

Rational fractional_part(Rational x) {
    x.canonicalize();
    Integer floor;
    mpz_fdiv_q(floor.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational out = x - Rational(floor);
    out.canonicalize();
    return out;
}

}  // namespace

IntPoly faddeev_leverrier(const IntMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntMatrix acc(n);  // M_0 = 0
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc + scaled(id, c[n - k + 1]);
        Integer t = -trace(m * acc);
        if (!mpz_divisible_ui_p(t.get_mpz_t(), k)) {
            throw InternalError("faddeev_leverrier: inexact division");
        }
        mpz_divexact_ui(c[n - k].get_mpz_t(), t.get_mpz_t(), k);
    }
    return IntPoly(std::move(c));
}

Integer snf_fixed_count(const IntMatrix& m, unsigned long iterate) {
    if (iterate == 0) {
        throw std::invalid_argument("snf_fixed_count: iterate must be at least 1");
    }
    const SmithForm snf = smith_normal_form(IntMatrix::identity(m.dim()) - mat_pow(m, iterate));
    Integer product = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        product *= snf.diagonal(i, i);
    }
    return product;
}

FixedPointSet enumerate_fixed_points(const IntMatrix& m, unsigned long iterate, unsigned long limit) {
    if (iterate == 0) {
        throw std::invalid_argument("enumerate_fixed_points: iterate must be at least 1");
    }
    const std::size_t d = m.dim();
    const IntMatrix power = mat_pow(m, iterate);
    // U (1 - M^m) V = D, so (1 - M^m) x in Z^d  <=>  D V^-1 x in Z^d
    const SmithForm snf = smith_normal_form(IntMatrix::identity(d) - power);

    FixedPointSet out;
    std::vector<Integer> moduli(d);
    Integer total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        moduli[i] = snf.diagonal(i, i);
        total *= moduli[i];
    }
    if (total == 0) {
        out.finite = false;
        return out;
    }
    if (total > limit) {
        throw std::length_error("enumeration too large");
    }
    out.finite = true;
    out.count = total;

    std::vector<Integer> digits(d, 0);
    const unsigned long n_points = total.get_ui();
    out.points.reserve(n_points);
    for (unsigned long index = 0; index < n_points; ++index) {
        std::vector<Rational> x(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rational acc = 0;
            for (std::size_t i = 0; i < d; ++i) {
                acc += Rational(snf.right(j, i) * digits[i], moduli[i]);
            }
            x[j] = fractional_part(acc);
        }
        // exact substitution: M^m x - x must be integral
        for (std::size_t r = 0; r < d; ++r) {
            Rational image = -x[r];
            for (std::size_t j = 0; j < d; ++j) {
                image += Rational(power(r, j)) * x[j];
            }
            image.canonicalize();
            if (image.get_den() != 1) {
                throw InternalError("enumerate_fixed_points: produced a non-fixed point");
            }
        }
        out.points.push_back(std::move(x));
        // next mixed-radix digit vector
        for (std::size_t i = 0; i < d; ++i) {
            if (++digits[i] < moduli[i]) {
                break;
            }
            digits[i] = 0;
        }
    }
    std::sort(out.points.begin(), out.points.end());
    if (std::adjacent_find(out.points.begin(), out.points.end()) != out.points.end()) {
        throw InternalError("enumerate_fixed_points: duplicate point");
    }
    return out;
}

std::vector<Rational> exp_sum_zeta_series(const IntMatrix& m, std::size_t n) {
    std::vector<Integer> counts(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        counts[k] = snf_fixed_count(m, k);
    }
    // E = exp(g) with g' = sum a_k z^(k-1): n E_n = sum_{k=1}^{n} a_k E_{n-k}
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= j; ++k) {
            acc += Rational(counts[k]) * e[j - k];
        }
        e[j] = acc / Rational(static_cast<unsigned long>(j));
        e[j].canonicalize();
    }
    return e;
}

std::vector<Integer> euler_product_series(const std::vector<Integer>& exponents, std::size_t n) {
    std::vector<Integer> series(n + 1);
    series[0] = 1;
    for (std::size_t m = 1; m <= std::min(n, exponents.size()); ++m) {
        // (1 - z^m)^(-c) = sum_j binom(-c, j) (-1)^j z^(m j)
        const Integer minus_c = -exponents[m - 1];
        std::vector<Integer> factor(n + 1);
        for (std::size_t j = 0; j * m <= n; ++j) {
            mpz_bin_ui(factor[j * m].get_mpz_t(), minus_c.get_mpz_t(), j);
            if (j % 2 == 1) {
                factor[j * m] = -factor[j * m];
            }
        }
        std::vector<Integer> next(n + 1);
        for (std::size_t a = 0; a <= n; ++a) {
            if (series[a] == 0) {
                continue;
            }
            for (std::size_t b = 0; a + b <= n; b += m) {
                next[a + b] += series[a] * factor[b];
            }
        }
        series = std::move(next);
    }
    return series;
}

OracleSigns sturm_sign_oracle(const IntMatrix& m) {
    const IntPoly p = faddeev_leverrier(m);
    const unsigned below = real_root_count_region(p, RealRegion::BelowMinusOne);
    const unsigned above = real_root_count_region(p, RealRegion::AboveOne);
    OracleSigns out;
    out.delta = below % 2 == 0 ? 1 : -1;
    out.epsilon = (below + above) % 2 == 0 ? 1 : -1;
    return out;
}

}  // namespace toruszeta::oracle
