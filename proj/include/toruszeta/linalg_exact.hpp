#ifndef TORUSZETA_LINALG_EXACT_HPP
#define TORUSZETA_LINALG_EXACT_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace toruszeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exactness guarantee of the library is violated.  Never a
/// consequence of user input; seeing one means there is a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Square matrix of arbitrary-precision integers, stored row-major.
class IntMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit IntMatrix(std::size_t dim);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t dim);
    /// Throws std::invalid_argument unless rows form a non-empty square array.
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t dim() const { return dim_; }

    Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Integer& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    std::vector<std::vector<Integer>> rows() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::vector<Integer> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& m, const Integer& factor);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// M^e by repeated squaring; M^0 is the identity.
IntMatrix mat_pow(const IntMatrix& m, unsigned long e);

Integer trace(const IntMatrix& m);

/// Determinant by Bareiss fraction-free elimination.  Every intermediate
/// value is an integer (each division is exact).
Integer det_exact(const IntMatrix& m);

/// The k-element subsets of {0, .., n-1}, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t k);

/// Compound matrix of order k: entry (S, T) is the minor of m on rows S and
/// columns T, with S and T ranging over sorted_subsets(dim, k).
IntMatrix exterior_power(const IntMatrix& m, std::size_t k);

struct SmithForm {
    IntMatrix left;      // U
    IntMatrix diagonal;  // D
    IntMatrix right;     // V
};

/// U * m * V = D, U and V unimodular, D diagonal with non-negative entries
/// and d_1 | d_2 | ... (zeros trail).
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace toruszeta

#endif  // TORUSZETA_LINALG_EXACT_HPP
