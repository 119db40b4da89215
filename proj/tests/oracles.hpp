// oracles.hpp: independent reference computations used only by the tests

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

inline Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd m;
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// exp(a) by Taylor series summation with scaling and squaring.
inline Eigen::Matrix2cd expm_series(const Eigen::Matrix2cd& a) {
    int squarings = 0;
    Eigen::Matrix2cd scaled = a;
    while (scaled.norm() > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd sum = term;
    for (int k = 1; k < 40; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

/// exp(-i (angle/2) axis.sigma) from the matrix series.
inline Eigen::Matrix2cd rotation_matrix(const Eigen::Vector3d& axis, double angle) {
    Eigen::Matrix2cd gen = axis.x() * pauli(1) + axis.y() * pauli(2) + axis.z() * pauli(3);
    return expm_series(cplx(0, -0.5 * angle) * gen);
}

/// J_n(x) from the ascending series sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!), long double.
inline double bessel_series(int n, double xd, int terms = 30) {
    const long double x = xd;
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= (x / 2.0L) / i;
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k) {
        sum += term;
        term *= -(x / 2.0L) * (x / 2.0L) / ((k + 1.0L) * (k + 1.0L + n));
    }
    return static_cast<double>(sum);
}

/// coth(x) = (e^{2x} + 1)/(e^{2x} - 1).
inline double coth_exp(double x) {
    const double e = std::exp(2.0 * x);
    return (e + 1.0) / (e - 1.0);
}

/// Gaussian elimination with partial pivoting for a 3x3 system.
inline std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> a) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = a[r][3];
        for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

/// Rodrigues rotation by angle about a unit axis.
inline Eigen::Matrix3d rodrigues(const Eigen::Vector3d& n, double angle) {
    Eigen::Matrix3d k;
    k << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1 - std::cos(angle)) * k * k;
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::Vector3d v(g(rng), g(rng), g(rng));
    return v.normalized();
}

}  // namespace oracle
