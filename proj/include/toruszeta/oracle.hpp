#ifndef TORUSZETA_ORACLE_HPP
#define TORUSZETA_ORACLE_HPP

// Brute-force cross-checks for the zeta pipeline.  Nothing here calls
// det_exact on 1 - M^m or goes through char_factors, so a bug in the main
// path cannot hide behind a shared computation.

#include <cstddef>
#include <optional>
#include <vector>

#include "toruszeta/linalg_exact.hpp"
#include "toruszeta/polyring.hpp"

namespace toruszeta::oracle {

inline constexpr unsigned long kEnumerationLimit = 10000;

struct FixedPointSet {
    bool finite = false;
    /// Sorted lexicographically, coordinates in [0, 1).
    std::vector<std::vector<Rational>> points;
    std::optional<Integer> count;
};

struct OracleSigns {
    int delta = 1;
    int epsilon = 1;
};

/// det(x - M) by the Faddeev-LeVerrier recursion (integer arithmetic only).
IntPoly faddeev_leverrier(const IntMatrix& m);

/// Index of the lattice (1 - M^m) Z^d read off the Smith form; 0 when the
/// fixed-point group of M^m contains a subtorus.
Integer snf_fixed_count(const IntMatrix& m, unsigned long iterate);

/// Explicit fixed points of M^m on the torus.  Throws std::length_error when
/// more than `limit` points would be produced.
FixedPointSet enumerate_fixed_points(const IntMatrix& m, unsigned long iterate,
                                     unsigned long limit = kEnumerationLimit);

/// Taylor coefficients of exp(sum_{m<=n} a_m z^m / m) through degree n.
std::vector<Rational> exp_sum_zeta_series(const IntMatrix& m, std::size_t n);

/// Coefficients through degree n of prod_{m} (1 - z^m)^(-c_m), where
/// exponents[m - 1] = c_m.
std::vector<Integer> euler_product_series(const std::vector<Integer>& exponents, std::size_t n);

/// delta = (-1)^(#real eigenvalues < -1), epsilon = (-1)^(#real eigenvalues
/// outside [-1, 1]), both counted with multiplicity by Sturm sequences.
OracleSigns sturm_sign_oracle(const IntMatrix& m);

}  // namespace toruszeta::oracle

#endif  // TORUSZETA_ORACLE_HPP
