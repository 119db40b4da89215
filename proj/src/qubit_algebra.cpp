// qubit_algebra.cpp: Pauli-basis operator algebra

#include "qcstab/qubit_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qcstab {

namespace {

constexpr cplx kI{0.0, 1.0};

double max_abs(const std::array<cplx, 4>& c) {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

QubitOperator QubitOperator::from_matrix(const Eigen::Matrix2cd& m) {
    // c_k = tr(sigma_k m)/2
    return {0.5 * (m(0, 0) + m(1, 1)),
            0.5 * (m(0, 1) + m(1, 0)),
            0.5 * kI * (m(0, 1) - m(1, 0)),
            0.5 * (m(0, 0) - m(1, 1))};
}

Eigen::Matrix2cd QubitOperator::to_matrix() const {
    Eigen::Matrix2cd m;
    m(0, 0) = c_[0] + c_[3];
    m(0, 1) = c_[1] - kI * c_[2];
    m(1, 0) = c_[1] + kI * c_[2];
    m(1, 1) = c_[0] - c_[3];
    return m;
}

bool QubitOperator::is_hermitian(double tol) const {
    const double scale = std::max(1.0, max_abs(c_));
    return std::all_of(c_.begin(), c_.end(),
                       [&](const cplx& z) { return std::abs(z.imag()) <= tol * scale; });
}

bool QubitOperator::is_unitary(double tol) const {
    return ((*this) * adjoint()).distance(identity()) <= tol;
}

double QubitOperator::distance(const QubitOperator& other) const {
    return max_abs((*this - other).c_);
}

QubitOperator QubitOperator::operator*(const QubitOperator& rhs) const {
    // (a0 + a.s)(b0 + b.s) = a0 b0 + a.b + (a0 b + b0 a + i a x b).s
    const auto& a = c_;
    const auto& b = rhs.c_;
    const cplx dot = a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    const cplx crx = a[2] * b[3] - a[3] * b[2];
    const cplx cry = a[3] * b[1] - a[1] * b[3];
    const cplx crz = a[1] * b[2] - a[2] * b[1];
    return {a[0] * b[0] + dot,
            a[0] * b[1] + b[0] * a[1] + kI * crx,
            a[0] * b[2] + b[0] * a[2] + kI * cry,
            a[0] * b[3] + b[0] * a[3] + kI * crz};
}

QubitOperator QubitOperator::operator+(const QubitOperator& rhs) const {
    return {c_[0] + rhs.c_[0], c_[1] + rhs.c_[1], c_[2] + rhs.c_[2], c_[3] + rhs.c_[3]};
}

QubitOperator QubitOperator::operator-(const QubitOperator& rhs) const {
    return {c_[0] - rhs.c_[0], c_[1] - rhs.c_[1], c_[2] - rhs.c_[2], c_[3] - rhs.c_[3]};
}

QubitOperator QubitOperator::operator*(cplx s) const {
    return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
}

QubitOperator density_from_bloch(const Vec3& s) {
    return QubitOperator::from_vector(0.5 * s, 0.5);
}

BlochState bloch_from_density(const QubitOperator& rho, double t) {
    if (!rho.is_hermitian(1e-12)) {
        throw InvalidState("density operator is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-12) {
        throw InvalidState("density operator trace differs from 1");
    }
    BlochState state{2.0 * rho.vector_part(), t};
    // eigenvalues of rho are (1 +- |s|)/2
    if (state.norm() > 1.0 + 1e-12) {
        throw InvalidState("density operator is not positive semidefinite");
    }
    return state;
}

QubitOperator pauli_rotation(const Vec3& axis, double angle) {
    if (!std::isfinite(angle) || std::abs(axis.norm() - 1.0) > 1e-12) {
        throw std::domain_error("pauli_rotation: axis must be a unit vector");
    }
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    return {c, -kI * s * axis.x(), -kI * s * axis.y(), -kI * s * axis.z()};
}

QubitOperator conjugate(const QubitOperator& op, const QubitOperator& u) {
    if (!u.is_unitary(1e-12)) {
        throw std::domain_error("conjugate: operator is not unitary");
    }
    return u.adjoint() * op * u;
}

Mat3 adjoint_rotation(const QubitOperator& u) {
    Mat3 r;
    r.col(0) = conjugate(QubitOperator::sigma_x(), u).vector_part();
    r.col(1) = conjugate(QubitOperator::sigma_y(), u).vector_part();
    r.col(2) = conjugate(QubitOperator::sigma_z(), u).vector_part();
    return r;
}

}  // namespace qcstab
