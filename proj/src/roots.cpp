#include "toruszeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace toruszeta {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

constexpr int kMaxSweeps = 2000;

Real to_real(const Integer& x) { return Real(x.get_str()); }

struct Evaluation {
    Complex value;
    Complex slope;
};

Evaluation horner(const std::vector<Real>& a, const Complex& z) {
    Complex value(0);
    Complex slope(0);
    for (std::size_t i = a.size(); i-- > 0;) {
        slope = slope * z + value;
        value = value * z + Complex(a[i]);
    }
    return {value, slope};
}

std::vector<Complex> aberth(const std::vector<Real>& a) {
    const std::size_t n = a.size() - 1;
    const Real lead = abs(a.back());
    Real radius = a.front() == 0 ? Real(1) : pow(abs(a.front()) / lead, Real(1) / Real(n));
    if (radius == 0) {
        radius = 1;
    }
    const Real pi = boost::math::constants::pi<Real>();
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Real angle = 2 * pi * Real(k) / Real(n) + Real(0.4);
        z[k] = Complex(radius * cos(angle), radius * sin(angle));
    }
    const Real stop = Real("1e-45");
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        Real largest_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto [value, slope] = horner(a, z[i]);
            if (value == Complex(0)) {
                continue;
            }
            Complex ratio = slope == Complex(0) ? Complex(Real("1e-20")) : value / slope;
            Complex repulsion(0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && z[j] != z[i]) {
                    repulsion += Complex(1) / (z[i] - z[j]);
                }
            }
            const Complex step = ratio / (Complex(1) - ratio * repulsion);
            z[i] -= step;
            const Real size = abs(step) / std::max(Real(1), Real(abs(z[i])));
            largest_step = std::max(largest_step, size);
        }
        if (largest_step < stop) {
            break;
        }
    }
    return z;
}

double round_down(const Real& x) {
    const double d = static_cast<double>(x);
    return std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double round_up(const Real& x) {
    const double d = static_cast<double>(x);
    return std::nextafter(d, std::numeric_limits<double>::infinity());
}

}  // namespace

std::vector<RootCluster> enclose_roots(const IntPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("enclose_roots: zero polynomial");
    }
    const IntPoly q = squarefree_part(p);
    if (q.degree() < 1) {
        return {};
    }
    std::vector<Real> a;
    a.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) {
        a.push_back(to_real(c));
    }
    const std::size_t n = a.size() - 1;
    const std::vector<Complex> z = aberth(a);

    // inclusion radii, padded for the rounding in evaluating them
    const Real lead = abs(a.back());
    const Real pad("1e-40");
    std::vector<Real> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        Real denom = lead;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                denom *= abs(z[i] - z[j]);
            }
        }
        const Real numer = Real(n) * abs(horner(a, z[i]).value);
        r[i] = denom == 0 ? std::numeric_limits<Real>::infinity() : numer / denom;
        r[i] += pad * (1 + abs(z[i]));
    }

    // connected components of overlapping disks
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (abs(z[i] - z[j]) <= r[i] + r[j]) {
                parent[find(i)] = find(j);
            }
        }
    }

    std::vector<RootCluster> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] == n) {
            slot[root] = clusters.size();
            clusters.emplace_back();
            clusters.back().modulus_lo = std::numeric_limits<double>::infinity();
        }
        RootCluster& c = clusters[slot[root]];
        const Real modulus = abs(z[i]);
        c.centers.emplace_back(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
        ++c.count;
        c.modulus_lo = std::min(c.modulus_lo, std::max(0.0, round_down(modulus - r[i])));
        c.modulus_hi = std::max(c.modulus_hi, round_up(modulus + r[i]));
    }
    return clusters;
}

}  // namespace toruszeta
