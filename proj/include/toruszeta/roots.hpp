#ifndef TORUSZETA_ROOTS_HPP
#define TORUSZETA_ROOTS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "toruszeta/polyring.hpp"

namespace toruszeta {

/// A connected group of inclusion disks.  Exactly `count` roots of the
/// polynomial lie in the union of the disks, and every one of them has modulus
/// in [modulus_lo, modulus_hi].
struct RootCluster {
    std::vector<std::complex<double>> centers;
    std::size_t count = 0;
    double modulus_lo = 0.0;
    double modulus_hi = 0.0;
};

/// Encloses all complex roots of p (any multiplicity structure; the roots of
/// the squarefree part are located).  Aberth iteration in 50-digit binary
/// floating point, followed by Braess-Hadeler inclusion disks
/// r_i = n |p(z_i)| / (|a_n| prod_{j != i} |z_i - z_j|).
std::vector<RootCluster> enclose_roots(const IntPoly& p);

}  // namespace toruszeta

#endif  // TORUSZETA_ROOTS_HPP
