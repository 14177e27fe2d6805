#ifndef TORUSZETA_ZETA_CORE_HPP
#define TORUSZETA_ZETA_CORE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toruszeta/linalg_exact.hpp"
#include "toruszeta/polyring.hpp"

namespace toruszeta {

inline constexpr double kDefaultTolerance = 1e-9;

/// Orders of the eigenvalues +1 (sigma) and -1 (tau), and the signs that turn
/// the signed fixed-point counts into isolated counts:
/// a_m = det(1 - M^m) * delta^m * epsilon.
struct SignData {
    unsigned sigma = 0;
    unsigned tau = 0;
    int delta = 1;
    int epsilon = 1;

    friend bool operator==(const SignData&, const SignData&) = default;
};

/// factors[k] = det(1 - z * exterior_power(M, k)) for k = 0..d.
struct CharFactors {
    std::vector<IntPoly> factors;
};

enum class Evidence { Exact, Numeric, Indeterminate };

struct ClassificationReport {
    bool singular = false;
    /// n such that the n-th cyclotomic polynomial divides det(x - M).
    std::vector<unsigned> root_of_unity_orders;
    bool quasihyperbolic = true;
    /// Absent when the numeric test cannot separate a root modulus from 1.
    std::optional<bool> hyperbolic;
    Evidence hyperbolic_evidence = Evidence::Exact;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ApproxReal {
    double value = 0.0;
    double error_bound = 0.0;

    friend bool operator==(const ApproxReal&, const ApproxReal&) = default;
};

struct FunctionalEquationResult {
    Integer det;      // D
    Integer factor;   // B: D for d = 1, else 1
    bool lefschetz_holds = false;
    bool artin_mazur_holds = false;

    bool holds() const { return lefschetz_holds && artin_mazur_holds; }
};

struct ZetaReport {
    IntMatrix matrix = IntMatrix(1);
    RatFunc lefschetz_zeta;
    RatFunc artin_mazur_zeta;
    SignData signs;
    std::vector<Integer> counts;         // a_1..a_N
    std::vector<Integer> signed_counts;  // det(1 - M^m), m = 1..N
    std::vector<Integer> exponents;      // c_1..c_N
    ClassificationReport classification;
    /// Absent for singular M.
    std::optional<bool> functional_equation_holds;
    std::optional<ApproxReal> growth_rate;

    friend bool operator==(const ZetaReport&, const ZetaReport&) = default;
};

/// det(x - M) as a polynomial in x.
IntPoly characteristic_polynomial(const IntMatrix& m);

CharFactors char_factors(const IntMatrix& m);

/// Alternating product prod_k P_k^((-1)^(k+1)), reduced.
RatFunc lefschetz_zeta(const IntMatrix& m);
RatFunc lefschetz_zeta(const CharFactors& factors);

/// det(1 - M^m).
Integer signed_count(const IntMatrix& m, unsigned long iterate);
/// |det(1 - M^m)|, the number of isolated fixed points of M^m on the torus.
Integer isolated_fixed_count(const IntMatrix& m, unsigned long iterate);

/// Signs from the multiplicity-stripped polynomials det(x -+ M) at x = 1.
SignData signs(const IntMatrix& m);

/// (lefschetz_zeta(delta z))^epsilon.
RatFunc artin_mazur_zeta(const IntMatrix& m);
/// prod_k det(1 - delta z exterior_power(M, k))^(epsilon (-1)^(k+1)), built
/// factor by factor.  Equal to artin_mazur_zeta as a canonical RatFunc.
RatFunc artin_mazur_zeta_product(const IntMatrix& m);

/// c_1..c_n by Moebius inversion of the isolated counts.  Throws InternalError
/// if a division by m is inexact.
std::vector<Integer> euler_exponents(const IntMatrix& m, std::size_t n);

/// z zeta'(z) / zeta(z) = sum a_m z^m.
RatFunc generating_function(const IntMatrix& m);

/// 1 / (smallest modulus of a root of the reduced denominator of the
/// generating function).  Absent when that denominator is constant.
std::optional<ApproxReal> growth_rate(const IntMatrix& m, double tolerance = kDefaultTolerance);

/// Both reciprocal-substitution identities; throws std::domain_error for
/// singular M.
FunctionalEquationResult functional_equation_check(const IntMatrix& m);

/// Phi_n as an integer polynomial.
IntPoly cyclotomic_polynomial(unsigned n);

ClassificationReport classify(const IntMatrix& m, double tolerance = kDefaultTolerance);

ZetaReport make_report(const IntMatrix& m, std::size_t max_m, double tolerance = kDefaultTolerance);

}  // namespace toruszeta

#endif  // TORUSZETA_ZETA_CORE_HPP
