#ifndef TORUSZETA_POLYRING_HPP
#define TORUSZETA_POLYRING_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "toruszeta/linalg_exact.hpp"

namespace toruszeta {

/// Univariate polynomial over Z.  Coefficients ascend by degree and carry no
/// trailing zeros, so the zero polynomial has an empty coefficient list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    /// c * z^degree
    static IntPoly monomial(const Integer& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of z^i (zero beyond the degree).
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// p / content, with a positive leading coefficient.
    IntPoly primitive_part() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly scale(const IntPoly& p, const Integer& c);
IntPoly derivative(const IntPoly& p);

/// p(-z)
IntPoly reflect(const IntPoly& p);
/// z^deg(p) * p(1/z), i.e. the coefficients reversed.
IntPoly reversed(const IntPoly& p);
/// p(c * z)
IntPoly dilate(const IntPoly& p, const Integer& c);

/// p / q where q divides p in Z[z]; throws InternalError otherwise.
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

/// lc(q)^(deg p - deg q + 1) * p  mod  q
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

/// Primitive gcd with positive leading coefficient (primitive pseudo-remainder
/// sequence).  Requires p, q not both zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// det(constant + z * linear), by evaluation at z = 0..n and interpolation.
IntPoly det_poly_linear(const IntMatrix& constant, const IntMatrix& linear);

/// Order of vanishing of p at x0 in {+1, -1}.
unsigned multiplicity_at(const IntPoly& p, int x0);

/// Yun's decomposition: p = c * prod q_i^i with q_i squarefree, primitive and
/// pairwise coprime.  Returned as (q_i, i) for the non-constant q_i.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p);

/// Product of the distinct irreducible factors of p (primitive).
IntPoly squarefree_part(const IntPoly& p);

/// Number of distinct real roots of a squarefree p in the open interval
/// (lower, upper) via a Sturm sequence.  Neither endpoint may be a root.
unsigned sturm_count(const IntPoly& squarefree, const Rational& lower, const Rational& upper);
unsigned sturm_count_below(const IntPoly& squarefree, const Rational& upper);
unsigned sturm_count_above(const IntPoly& squarefree, const Rational& lower);

enum class RealRegion { BelowMinusOne, AboveOne };

/// Real roots of p in (-inf, -1) or (1, inf), counted with multiplicity.
unsigned real_root_count_region(const IntPoly& p, RealRegion region);

/// Reduced fraction num/den over Z[z].
///
/// Canonical form: gcd(num, den) = 1 in Q[z]; the contents of num and den are
/// coprime integers; the lowest-order nonzero coefficient of den is positive.
/// Zero is 0/1.  Two RatFuncs are equal as functions iff their canonical forms
/// are identical.
class RatFunc {
public:
    RatFunc() : den_(IntPoly{1}) {}
    RatFunc(const IntPoly& p) : num_(p), den_(IntPoly{1}) { normalize(); }  // NOLINT
    static RatFunc constant(const Integer& c) { return RatFunc(IntPoly::constant(c)); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    friend RatFunc make_ratfunc(IntPoly num, IntPoly den);

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

RatFunc make_ratfunc(IntPoly num, IntPoly den);

RatFunc operator*(const RatFunc& f, const RatFunc& g);
RatFunc operator/(const RatFunc& f, const RatFunc& g);
RatFunc operator+(const RatFunc& f, const RatFunc& g);
RatFunc pow(const RatFunc& f, long e);

/// f(s * z) for s = +1 or -1.
RatFunc substitute_signed(const RatFunc& f, int s);

/// f(1 / (D z)).
RatFunc substitute_reciprocal(const RatFunc& f, const Integer& d);

/// Taylor coefficients of f at 0 through degree n.
std::vector<Rational> series_expand(const RatFunc& f, std::size_t n);

/// z * f'(z) / f(z).
RatFunc log_derivative(const RatFunc& f);

/// Value at a rational point that is not a pole.
Rational evaluate(const RatFunc& f, const Rational& x);

}  // namespace toruszeta

#endif  // TORUSZETA_POLYRING_HPP
