#include "toruszeta/zeta_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "toruszeta/roots.hpp"

namespace toruszeta {

namespace {

int moebius(unsigned long n) {
    int result = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

unsigned totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

IntPoly power_of_x_minus_one(unsigned e) {
    IntPoly out{1};
    for (unsigned i = 0; i < e; ++i) {
        out = out * IntPoly{-1, 1};
    }
    return out;
}

std::vector<Integer> exponents_from_counts(const std::vector<Integer>& counts) {
    std::vector<Integer> out(counts.size());
    for (std::size_t m = 1; m <= counts.size(); ++m) {
        Integer acc = 0;
        for (std::size_t l = 1; l <= m; ++l) {
            if (m % l == 0) {
                acc += moebius(m / l) * counts[l - 1];
            }
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), m)) {
            throw InternalError("euler_exponents: non-integral exponent at m = " + std::to_string(m));
        }
        mpz_divexact_ui(out[m - 1].get_mpz_t(), acc.get_mpz_t(), m);
    }
    return out;
}

}  // namespace

IntPoly characteristic_polynomial(const IntMatrix& m) {
    return det_poly_linear(-m, IntMatrix::identity(m.dim()));
}

CharFactors char_factors(const IntMatrix& m) {
    CharFactors out;
    for (std::size_t k = 0; k <= m.dim(); ++k) {
        const IntMatrix compound = exterior_power(m, k);
        out.factors.push_back(det_poly_linear(IntMatrix::identity(compound.dim()), -compound));
    }
    return out;
}

RatFunc lefschetz_zeta(const CharFactors& factors) {
    // numerator collects odd k, denominator even k
    IntPoly num{1};
    IntPoly den{1};
    for (std::size_t k = 0; k < factors.factors.size(); ++k) {
        (k % 2 == 0 ? den : num) = (k % 2 == 0 ? den : num) * factors.factors[k];
    }
    return make_ratfunc(std::move(num), std::move(den));
}

RatFunc lefschetz_zeta(const IntMatrix& m) { return lefschetz_zeta(char_factors(m)); }

Integer signed_count(const IntMatrix& m, unsigned long iterate) {
    if (iterate == 0) {
        throw std::invalid_argument("signed_count: iterate must be at least 1");
    }
    return det_exact(IntMatrix::identity(m.dim()) - mat_pow(m, iterate));
}

Integer isolated_fixed_count(const IntMatrix& m, unsigned long iterate) {
    return abs(signed_count(m, iterate));
}

SignData signs(const IntMatrix& m) {
    const IntMatrix id = IntMatrix::identity(m.dim());
    const IntPoly minus = characteristic_polynomial(m);  // det(x - M)
    const IntPoly plus = det_poly_linear(m, id);          // det(x + M)

    SignData out;
    out.sigma = multiplicity_at(minus, 1);
    out.tau = multiplicity_at(minus, -1);
    const Integer at_one_plus = divide_exact(plus, power_of_x_minus_one(out.tau)).eval(Integer(1));
    const Integer at_one_minus = divide_exact(minus, power_of_x_minus_one(out.sigma)).eval(Integer(1));
    if (at_one_plus == 0 || at_one_minus == 0) {
        throw InternalError("signs: stripped polynomial still vanishes at 1");
    }
    out.delta = sgn(at_one_plus);
    out.epsilon = out.delta * sgn(at_one_minus);

    if (out.sigma == 0 && out.tau == 0) {
        const int fast_delta = sgn(det_exact(id + m));
        const int fast_epsilon = fast_delta * sgn(det_exact(id - m));
        if (fast_delta != out.delta || fast_epsilon != out.epsilon) {
            throw InternalError("signs: general and fast sign formulas disagree");
        }
    }
#ifdef TORUSZETA_MUTATE_EPSILON
    // deliberately corrupted build used to test that `check` notices
    out.epsilon = -out.epsilon;
#endif
    return out;
}

RatFunc artin_mazur_zeta(const IntMatrix& m) {
    const SignData s = signs(m);
    return pow(substitute_signed(lefschetz_zeta(m), s.delta), s.epsilon);
}

RatFunc artin_mazur_zeta_product(const IntMatrix& m) {
    const SignData s = signs(m);
    RatFunc out = RatFunc::constant(1);
    for (std::size_t k = 0; k <= m.dim(); ++k) {
        const IntMatrix compound = exterior_power(m, k);
        const IntPoly factor = det_poly_linear(IntMatrix::identity(compound.dim()),
                                               scaled(compound, Integer(-s.delta)));
        const long exponent = s.epsilon * (k % 2 == 0 ? -1 : 1);
        out = out * pow(RatFunc(factor), exponent);
    }
    return out;
}

std::vector<Integer> euler_exponents(const IntMatrix& m, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("euler_exponents: need at least one exponent");
    }
    std::vector<Integer> counts;
    counts.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        counts.push_back(isolated_fixed_count(m, k));
    }
    return exponents_from_counts(counts);
}

RatFunc generating_function(const IntMatrix& m) { return log_derivative(artin_mazur_zeta(m)); }

std::optional<ApproxReal> growth_rate(const IntMatrix& m, double tolerance) {
    if (!(tolerance > 0)) {
        throw std::invalid_argument("growth_rate: tolerance must be positive");
    }
    const IntPoly den = generating_function(m).den();
    if (den.degree() < 1) {
        return std::nullopt;
    }
    const auto clusters = enclose_roots(den);
    double radius_lo = clusters.front().modulus_lo;
    double radius_hi = clusters.front().modulus_hi;
    for (const auto& c : clusters) {
        radius_lo = std::min(radius_lo, c.modulus_lo);
        radius_hi = std::min(radius_hi, c.modulus_hi);
    }
    if (!(radius_lo > 0)) {
        throw InternalError("growth_rate: denominator root enclosure touches the origin");
    }
    const double rate_hi = 1.0 / radius_lo;
    const double rate_lo = 1.0 / radius_hi;
    ApproxReal out{(rate_hi + rate_lo) / 2, (rate_hi - rate_lo) / 2};
    // the final division rounds; widen by one ulp of the value
    out.error_bound += std::abs(out.value) * 2.3e-16;
    if (out.error_bound > tolerance) {
        throw std::runtime_error("growth_rate: root enclosure wider than the requested tolerance");
    }
    return out;
}

FunctionalEquationResult functional_equation_check(const IntMatrix& m) {
    FunctionalEquationResult out;
    out.det = det_exact(m);
    if (out.det == 0) {
        throw std::domain_error("functional equation undefined (det = 0)");
    }
    out.factor = m.dim() == 1 ? out.det : Integer(1);
    const long parity = m.dim() % 2 == 0 ? 1 : -1;
    const RatFunc b = RatFunc::constant(out.factor);

    const RatFunc tilde = lefschetz_zeta(m);
    out.lefschetz_holds = substitute_reciprocal(tilde, out.det) == b * pow(tilde, parity);

    const SignData s = signs(m);
    const RatFunc zeta = pow(substitute_signed(tilde, s.delta), s.epsilon);
    out.artin_mazur_holds =
        substitute_reciprocal(zeta, out.det) == pow(b, s.epsilon) * pow(zeta, parity);
    return out;
}

IntPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    // x^n - 1 = prod_{k | n} Phi_k
    IntPoly out = IntPoly::monomial(Integer(1), n) - IntPoly{1};
    for (unsigned k = 1; k < n; ++k) {
        if (n % k == 0) {
            out = divide_exact(out, cyclotomic_polynomial(k));
        }
    }
    return out;
}

ClassificationReport classify(const IntMatrix& m, double tolerance) {
    if (!(tolerance > 0)) {
        throw std::invalid_argument("classify: tolerance must be positive");
    }
    ClassificationReport out;
    const std::size_t d = m.dim();
    const IntPoly p = characteristic_polynomial(m);
    out.singular = det_exact(m) == 0;

    // phi(n) >= sqrt(n / 2), so phi(n) <= d forces n <= 2 d^2
    const unsigned limit = static_cast<unsigned>(std::max<std::size_t>(2, 2 * d * d));
    for (unsigned n = 1; n <= limit; ++n) {
        if (totient(n) <= d && poly_gcd(p, cyclotomic_polynomial(n)).degree() > 0) {
            out.root_of_unity_orders.push_back(n);
        }
    }
    out.quasihyperbolic = out.root_of_unity_orders.empty();

    if (!out.quasihyperbolic) {
        out.hyperbolic = false;
        out.hyperbolic_evidence = Evidence::Exact;
        return out;
    }
    // a unimodular root lambda makes 1/lambda = conj(lambda) a root as well
    if (poly_gcd(p, reversed(p)).degree() < 1) {
        out.hyperbolic = true;
        out.hyperbolic_evidence = Evidence::Exact;
        return out;
    }
    for (const auto& cluster : enclose_roots(p)) {
        const bool away = cluster.modulus_hi < 1.0 - tolerance || cluster.modulus_lo > 1.0 + tolerance;
        if (!away) {
            out.hyperbolic.reset();
            out.hyperbolic_evidence = Evidence::Indeterminate;
            return out;
        }
    }
    out.hyperbolic = true;
    out.hyperbolic_evidence = Evidence::Numeric;
    return out;
}

ZetaReport make_report(const IntMatrix& m, std::size_t max_m, double tolerance) {
    if (max_m == 0) {
        throw std::invalid_argument("make_report: max_m must be at least 1");
    }
    ZetaReport out;
    out.matrix = m;
    out.lefschetz_zeta = lefschetz_zeta(m);
    out.signs = signs(m);
    out.artin_mazur_zeta =
        pow(substitute_signed(out.lefschetz_zeta, out.signs.delta), out.signs.epsilon);
    for (std::size_t k = 1; k <= max_m; ++k) {
        out.signed_counts.push_back(signed_count(m, k));
        out.counts.push_back(abs(out.signed_counts.back()));
    }
    out.exponents = exponents_from_counts(out.counts);
    out.classification = classify(m, tolerance);
    if (det_exact(m) != 0) {
        out.functional_equation_holds = functional_equation_check(m).holds();
    }
    out.growth_rate = growth_rate(m, tolerance);
    return out;
}

}  // namespace toruszeta
