#pragma once

// Test-only reference computations. None of these call into the library's
// construction code: generators are rebuilt from their action on basis
// vectors, Kronecker products from the four-index definition, Laguerre
// polynomials from their explicit coefficient sums.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline double coeff(std::size_t n, double q) {
    const double nd = static_cast<double>(n);
    return std::sqrt(nd * (nd + 2.0 * q - 1.0));
}

// Column j of the truncated operator is the image of basis vector j; states
// pushed past the cutoff are dropped.
inline Mat lowering(std::size_t dim, double q) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 1; j < dim; ++j) {
        m(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(j)) = coeff(j, q);
    }
    return m;
}

inline Mat raising(std::size_t dim, double q) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j + 1 < dim; ++j) {
        m(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j)) = coeff(j + 1, q);
    }
    return m;
}

inline Mat weight(std::size_t dim, double q) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = static_cast<double>(j) + q;
    }
    return m;
}

// (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l], row-major over the pair.
inline Mat kron(const Mat& a, const Mat& b) {
    const Eigen::Index ra = a.rows();
    const Eigen::Index rb = b.rows();
    Mat out = Mat::Zero(ra * rb, ra * rb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ra; ++j)
            for (Eigen::Index k = 0; k < rb; ++k)
                for (Eigen::Index l = 0; l < rb; ++l)
                    out(i * rb + k, j * rb + l) = a(i, j) * b(k, l);
    return out;
}

// Diagonal of scale (K+K- - K0^2) on |n>: scale (C_n^2 - (n+q)^2) = -scale (n + q^2).
inline double axis_energy(std::size_t n, double q, double scale) {
    const double c = coeff(n, q);
    const double w = static_cast<double>(n) + q;
    return scale * (c * c - w * w);
}

// L^a_n(y) = sum_k (-1)^k binom(n + a, n - k) y^k / k!.
// L^a_n(y) = sum_k (-1)^k binom(n + a, n - k) y^k / k!, with the binomial
// built as a running product so no gamma function is involved.
inline double laguerre_explicit(std::size_t n, double a, double y) {
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        double binom = 1.0;
        for (std::size_t j = 1; j <= n - k; ++j) {
            binom *= (a + static_cast<double>(k + j)) / static_cast<double>(j);
        }
        double yk = 1.0;
        for (std::size_t j = 1; j <= k; ++j) {
            yk *= y / static_cast<double>(j);
        }
        sum += (k % 2 == 0 ? 1.0 : -1.0) * binom * yk;
    }
    return sum;
}

inline cd random_complex(std::mt19937_64& rng, double lo = -1.5, double hi = 1.5) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng)};
}

} // namespace oracle
