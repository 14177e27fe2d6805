#include "toruszeta/linalg_exact.hpp"

#include <algorithm>
#include <utility>

namespace toruszeta {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("IntMatrix: dimension must be at least 1");
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("IntMatrix: rows must form a square array");
        }
        std::size_t j = 0;
        for (long v : row) {
            (*this)(i, j++) = v;
        }
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("IntMatrix: empty matrix");
    }
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("IntMatrix: rows must form a square array");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
    std::vector<std::vector<Integer>> out(dim_, std::vector<Integer>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

namespace {

void require_same_dim(const IntMatrix& a, const IntMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    }
}

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
        std::swap(m(r1, j), m(r2, j));
    }
}

void swap_cols(IntMatrix& m, std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::swap(m(i, c1), m(i, c2));
    }
}

// row[target] -= factor * row[source]
void axpy_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
        m(target, j) -= factor * m(source, j);
    }
}

void axpy_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        m(i, target) -= factor * m(i, source);
    }
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "matrix addition");
    IntMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "matrix subtraction");
    IntMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(i, j) = a(i, j) - b(i, j);
        }
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a) { return scaled(a, Integer(-1)); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

IntMatrix scaled(const IntMatrix& m, const Integer& factor) {
    IntMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = m(i, j) * factor;
        }
    }
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    const std::size_t n = a.dim();
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long e) {
    IntMatrix result = IntMatrix::identity(m.dim());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1UL) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Integer trace(const IntMatrix& m) {
    Integer t = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

Integer det_exact(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix a = m;
    Integer previous_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot_row = k + 1;
            while (pivot_row < n && a(pivot_row, k) == 0) {
                ++pivot_row;
            }
            if (pivot_row == n) {
                return 0;
            }
            swap_rows(a, k, pivot_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        previous_pivot = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign > 0 ? det : Integer(-det);
}

std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> current(k);
    for (std::size_t i = 0; i < k; ++i) {
        current[i] = i;
    }
    while (true) {
        out.push_back(current);
        // advance to the next subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            current[j] = current[j - 1] + 1;
        }
    }
    return out;
}

IntMatrix exterior_power(const IntMatrix& m, std::size_t k) {
    const std::size_t d = m.dim();
    if (k > d) {
        throw std::invalid_argument("exterior_power: order k exceeds the dimension");
    }
    if (k == 0) {
        return IntMatrix{{1}};
    }
    const auto subsets = sorted_subsets(d, k);
    IntMatrix out(subsets.size());
    IntMatrix minor(k);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    minor(i, j) = m(subsets[s][i], subsets[t][j]);
                }
            }
            out(s, t) = det_exact(minor);
        }
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pr = t;
        std::size_t pc = t;
        for (std::size_t i = t; i < n; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pr, pc)))) {
                    found = true;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (!found) {
            break;
        }
        swap_rows(a, t, pr);
        swap_rows(u, t, pr);
        swap_cols(a, t, pc);
        swap_cols(v, t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                axpy_row(a, i, t, q);
                axpy_row(u, i, t, q);
                if (a(i, t) != 0) {
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                axpy_col(a, j, t, q);
                axpy_col(v, j, t, q);
                if (a(t, j) != 0) {
                    clean = false;
                }
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; move it into place
                std::size_t best_r = t;
                std::size_t best_c = t;
                for (std::size_t i = t + 1; i < n; ++i) {
                    if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) {
                        best_r = i;
                        best_c = t;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) {
                        best_r = t;
                        best_c = j;
                    }
                }
                swap_rows(a, t, best_r);
                swap_rows(u, t, best_r);
                swap_cols(a, t, best_c);
                swap_cols(v, t, best_c);
                continue;
            }
            // row and column are clear; enforce divisibility of the trailing block
            std::size_t bad_row = n;
            for (std::size_t i = t + 1; i < n && bad_row == n; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row == n) {
                break;
            }
            axpy_row(a, t, bad_row, Integer(-1));
            axpy_row(u, t, bad_row, Integer(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                a(t, j) = -a(t, j);
                u(t, j) = -u(t, j);
            }
        }
    }
    return SmithForm{std::move(u), std::move(a), std::move(v)};
}

}  // namespace toruszeta
