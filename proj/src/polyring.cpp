#include "toruszeta/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace toruszeta {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> coeffs(degree + 1);
    coeffs[degree] = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    acc.canonicalize();
    return acc;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) {
        return {};
    }
    Integer c = content();
    if (leading() < 0) {
        c = -c;
    }
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<Integer> out(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeff(i) + q.coeff(i);
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p) { return scale(p, Integer(-1)); }

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly scale(const IntPoly& p, const Integer& c) {
    std::vector<Integer> out(p.coeffs());
    for (auto& x : out) {
        x *= c;
    }
    return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Integer> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    }
    return IntPoly(std::move(out));
}

IntPoly reflect(const IntPoly& p) {
    std::vector<Integer> out(p.coeffs());
    for (std::size_t i = 1; i < out.size(); i += 2) {
        out[i] = -out[i];
    }
    return IntPoly(std::move(out));
}

IntPoly reversed(const IntPoly& p) {
    // low-order zeros of p become trailing zeros, which the constructor drops
    return IntPoly(std::vector<Integer>(p.coeffs().rbegin(), p.coeffs().rend()));
}

IntPoly dilate(const IntPoly& p, const Integer& c) {
    std::vector<Integer> out(p.coeffs());
    Integer power = 1;
    for (auto& x : out) {
        x *= power;
        power *= c;
    }
    return IntPoly(std::move(out));
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (p.is_zero()) {
        return {};
    }
    if (p.degree() < q.degree()) {
        throw InternalError("divide_exact: divisor does not divide dividend");
    }
    std::vector<Integer> rem(p.coeffs());
    const auto& b = q.coeffs();
    const std::size_t shift_max = rem.size() - b.size();
    std::vector<Integer> quot(shift_max + 1);
    for (std::size_t s = shift_max + 1; s-- > 0;) {
        const Integer& top = rem[s + b.size() - 1];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) {
            throw InternalError("divide_exact: quotient is not integral");
        }
        Integer factor;
        mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[s + j] -= factor * b[j];
        }
        quot[s] = std::move(factor);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
        throw InternalError("divide_exact: nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("pseudo_remainder: zero divisor");
    }
    if (p.degree() < q.degree()) {
        return p;
    }
    const auto& b = q.coeffs();
    const Integer& lead = b.back();
    const std::size_t db = b.size() - 1;
    long steps = p.degree() - q.degree() + 1;
    std::vector<Integer> rem(p.coeffs());
    while (!rem.empty() && rem.size() - 1 >= db) {
        const Integer factor = rem.back();
        const std::size_t shift = rem.size() - 1 - db;
        for (auto& c : rem) {
            c *= lead;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[shift + j] -= factor * b[j];
        }
        while (!rem.empty() && rem.back() == 0) {
            rem.pop_back();
        }
        --steps;
    }
    // top up so the multiplier is always lc^(deg p - deg q + 1)
    if (steps > 0) {
        Integer extra;
        mpz_pow_ui(extra.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : rem) {
            c *= extra;
        }
    }
    return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::invalid_argument("poly_gcd: both arguments are zero");
    }
    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

// ---------------------------------------------------------------------------
// Determinants of linear polynomial matrices

namespace {

using RatCoeffs = std::vector<Rational>;

RatCoeffs mul_linear(const RatCoeffs& p, const Rational& root) {
    // p * (z - root)
    RatCoeffs out(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= p[i] * root;
    }
    return out;
}

}  // namespace

IntPoly det_poly_linear(const IntMatrix& constant, const IntMatrix& linear) {
    if (constant.dim() != linear.dim()) {
        throw std::invalid_argument("det_poly_linear: dimension mismatch");
    }
    const std::size_t n = constant.dim();
    std::vector<Rational> divided(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        divided[i] = Rational(det_exact(constant + scaled(linear, Integer(static_cast<unsigned long>(i)))));
    }
    // Newton divided differences on the nodes 0, 1, ..., n
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t i = n; i >= level; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / Rational(static_cast<unsigned long>(level));
        }
    }
    RatCoeffs result(1, divided[n]);
    for (std::size_t j = n; j-- > 0;) {
        result = mul_linear(result, Rational(static_cast<unsigned long>(j)));
        result[0] += divided[j];
    }
    std::vector<Integer> coeffs(result.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
        result[i].canonicalize();
        if (result[i].get_den() != 1) {
            throw InternalError("det_poly_linear: interpolation produced a non-integral coefficient");
        }
        coeffs[i] = result[i].get_num();
    }
    return IntPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Multiplicities, squarefree parts and real roots

namespace {

// p / (z - x0) by synthetic division; requires p(x0) = 0.
IntPoly deflate(const IntPoly& p, int x0) {
    const auto& a = p.coeffs();
    std::vector<Integer> q(a.size() - 1);
    Integer carry = 0;
    for (std::size_t i = a.size(); i-- > 1;) {
        carry = a[i] + carry * x0;
        q[i - 1] = carry;
    }
    if (a[0] + carry * x0 != 0) {
        throw InternalError("deflate: point is not a root");
    }
    return IntPoly(std::move(q));
}

int sign_of(const Integer& x) { return sgn(x); }
int sign_of(const Rational& x) { return sgn(x); }

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> seq{p, derivative(p)};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPoly& a = seq[seq.size() - 2];
        const IntPoly& b = seq.back();
        IntPoly r = pseudo_remainder(a, b);
        // prem scales by lc(b)^k; undo the sign of that scaling, then negate
        const long k = a.degree() - b.degree() + 1;
        const bool flip = b.leading() < 0 && (k % 2 != 0);
        if (r.is_zero()) {
            break;
        }
        Integer c = r.content();
        IntPoly next = scale(r, Integer(flip ? 1 : -1));
        std::vector<Integer> reduced(next.coeffs());
        for (auto& x : reduced) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
        seq.emplace_back(std::move(reduced));
    }
    return seq;
}

unsigned count_variations(const std::vector<int>& signs) {
    unsigned changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

unsigned variations_at(const std::vector<IntPoly>& seq, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq) {
        signs.push_back(sign_of(s.eval(x)));
    }
    return count_variations(signs);
}

unsigned variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq) {
        if (s.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int sg = sign_of(s.leading());
        if (!positive && s.degree() % 2 != 0) {
            sg = -sg;
        }
        signs.push_back(sg);
    }
    return count_variations(signs);
}

void require_not_root(const IntPoly& p, const Rational& x) {
    if (p.eval(x) == 0) {
        throw std::invalid_argument("sturm_count: interval endpoint is a root");
    }
}

}  // namespace

unsigned multiplicity_at(const IntPoly& p, int x0) {
    if (p.is_zero()) {
        throw std::domain_error("multiplicity_at: zero polynomial");
    }
    if (x0 != 1 && x0 != -1) {
        throw std::invalid_argument("multiplicity_at: point must be +1 or -1");
    }
    unsigned order = 0;
    IntPoly q = p;
    while (q.eval(Integer(x0)) == 0) {
        q = deflate(q, x0);
        ++order;
    }
    return order;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (p.degree() < 1) {
        return out;
    }
    const IntPoly f = p.primitive_part();
    const IntPoly df = derivative(f);
    const IntPoly a0 = poly_gcd(f, df);
    IntPoly b = divide_exact(f, a0);
    IntPoly c = divide_exact(df, a0);
    IntPoly d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, d);
        if (a.degree() > 0) {
            out.emplace_back(a, i);
        }
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) {
        return {};
    }
    if (p.degree() < 1) {
        return IntPoly{1};
    }
    return divide_exact(p.primitive_part(), poly_gcd(p, derivative(p))).primitive_part();
}

unsigned sturm_count(const IntPoly& squarefree, const Rational& lower, const Rational& upper) {
    if (squarefree.degree() < 1 || !(lower < upper)) {
        return 0;
    }
    require_not_root(squarefree, lower);
    require_not_root(squarefree, upper);
    const auto seq = sturm_sequence(squarefree);
    return variations_at(seq, lower) - variations_at(seq, upper);
}

unsigned sturm_count_below(const IntPoly& squarefree, const Rational& upper) {
    if (squarefree.degree() < 1) {
        return 0;
    }
    require_not_root(squarefree, upper);
    const auto seq = sturm_sequence(squarefree);
    return variations_at_infinity(seq, false) - variations_at(seq, upper);
}

unsigned sturm_count_above(const IntPoly& squarefree, const Rational& lower) {
    if (squarefree.degree() < 1) {
        return 0;
    }
    require_not_root(squarefree, lower);
    const auto seq = sturm_sequence(squarefree);
    return variations_at(seq, lower) - variations_at_infinity(seq, true);
}

unsigned real_root_count_region(const IntPoly& p, RealRegion region) {
    if (p.is_zero()) {
        throw std::domain_error("real_root_count_region: zero polynomial");
    }
    unsigned total = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        // strip the roots at +-1 so that the open endpoints are never roots
        IntPoly q = factor;
        for (int x0 : {1, -1}) {
            while (q.eval(Integer(x0)) == 0) {
                q = deflate(q, x0);
            }
        }
        const unsigned distinct = region == RealRegion::BelowMinusOne
                                      ? sturm_count_below(q, Rational(-1))
                                      : sturm_count_above(q, Rational(1));
        total += multiplicity * distinct;
    }
    return total;
}

// ---------------------------------------------------------------------------
// RatFunc

void RatFunc::normalize() {
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = IntPoly{1};
        return;
    }
    const IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Integer c = gcd(num_.content(), den_.content());
    if (c != 1) {
        std::vector<Integer> n(num_.coeffs());
        std::vector<Integer> d(den_.coeffs());
        for (auto& x : n) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
        for (auto& x : d) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
        num_ = IntPoly(std::move(n));
        den_ = IntPoly(std::move(d));
    }
    const auto lowest = std::find_if(den_.coeffs().begin(), den_.coeffs().end(),
                                     [](const Integer& x) { return x != 0; });
    if (*lowest < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc make_ratfunc(IntPoly num, IntPoly den) {
    RatFunc f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.normalize();
    return f;
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return make_ratfunc(f.num() * g.num(), f.den() * g.den());
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) {
        throw std::domain_error("division by the zero function");
    }
    return make_ratfunc(f.num() * g.den(), f.den() * g.num());
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    return make_ratfunc(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

RatFunc pow(const RatFunc& f, long e) {
    RatFunc base = f;
    if (e < 0) {
        if (f.is_zero()) {
            throw std::domain_error("negative power of the zero function");
        }
        base = make_ratfunc(f.den(), f.num());
        e = -e;
    }
    RatFunc result = RatFunc::constant(1);
    while (e > 0) {
        if (e & 1L) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

RatFunc substitute_signed(const RatFunc& f, int s) {
    if (s == 1) {
        return f;
    }
    if (s != -1) {
        throw std::invalid_argument("substitute_signed: sign must be +1 or -1");
    }
    return make_ratfunc(reflect(f.num()), reflect(f.den()));
}

RatFunc substitute_reciprocal(const RatFunc& f, const Integer& d) {
    if (d == 0) {
        throw std::invalid_argument("substitute_reciprocal: D must be nonzero");
    }
    if (f.is_zero()) {
        return f;
    }
    // (Dz)^n p(1/(Dz)) for n = deg p
    IntPoly num = dilate(reversed(f.num()), d);
    IntPoly den = dilate(reversed(f.den()), d);
    const long n = f.num().degree();
    const long m = f.den().degree();
    if (m >= n) {
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m - n));
        num = num * IntPoly::monomial(factor, static_cast<std::size_t>(m - n));
    } else {
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - m));
        den = den * IntPoly::monomial(factor, static_cast<std::size_t>(n - m));
    }
    return make_ratfunc(std::move(num), std::move(den));
}

std::vector<Rational> series_expand(const RatFunc& f, std::size_t n) {
    const Integer d0 = f.den().coeff(0);
    if (d0 == 0) {
        throw std::domain_error("series_expand: pole at origin");
    }
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(f.num().coeff(k));
        const std::size_t top = std::min<std::size_t>(k, f.den().coeffs().size() - 1);
        for (std::size_t j = 1; j <= top; ++j) {
            acc -= Rational(f.den().coeffs()[j]) * out[k - j];
        }
        out[k] = acc / Rational(d0);
        out[k].canonicalize();
    }
    return out;
}

RatFunc log_derivative(const RatFunc& f) {
    if (f.is_zero()) {
        throw std::domain_error("log_derivative of the zero function");
    }
    const IntPoly z = IntPoly::monomial(Integer(1), 1);
    IntPoly num = z * (derivative(f.num()) * f.den() - f.num() * derivative(f.den()));
    return make_ratfunc(std::move(num), f.num() * f.den());
}

Rational evaluate(const RatFunc& f, const Rational& x) {
    const Rational den = f.den().eval(x);
    if (den == 0) {
        throw std::domain_error("evaluate: pole");
    }
    Rational value = f.num().eval(x) / den;
    value.canonicalize();
    return value;
}

}  // namespace toruszeta
