// qubit_algebra.hpp: 2x2 operators in the Pauli basis and Bloch vectors

#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qcstab {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Units: hbar = k_B = 1 and the static splitting Delta is the frequency unit,
// so times are in 1/Delta and temperatures in hbar*Delta/k_B.
inline constexpr double kDelta = 1.0;

/// Thrown when a density operator is not a valid qubit state.
class InvalidState : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// O = c0*1 + cx*sx + cy*sy + cz*sz with complex coefficients.
///
/// Products, adjoints and conjugations stay in closed form in this basis, so
/// no 2x2 matrix is ever materialised except for interop and tests.
class QubitOperator {
public:
    constexpr QubitOperator() = default;
    constexpr QubitOperator(cplx c0, cplx cx, cplx cy, cplx cz) : c_{c0, cx, cy, cz} {}

    static QubitOperator identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static QubitOperator sigma_x() { return {0.0, 1.0, 0.0, 0.0}; }
    static QubitOperator sigma_y() { return {0.0, 0.0, 1.0, 0.0}; }
    static QubitOperator sigma_z() { return {0.0, 0.0, 0.0, 1.0}; }
    /// Real combination v.sigma (+ c0 * 1).
    static QubitOperator from_vector(const Vec3& v, double c0 = 0.0) {
        return {c0, v.x(), v.y(), v.z()};
    }
    static QubitOperator from_matrix(const Eigen::Matrix2cd& m);

    Eigen::Matrix2cd to_matrix() const;

    cplx c0() const { return c_[0]; }
    cplx cx() const { return c_[1]; }
    cplx cy() const { return c_[2]; }
    cplx cz() const { return c_[3]; }
    const std::array<cplx, 4>& coefficients() const { return c_; }

    /// Real parts of (cx, cy, cz); the Bloch-like vector of a Hermitian operator.
    Vec3 vector_part() const { return {c_[1].real(), c_[2].real(), c_[3].real()}; }

    cplx trace() const { return 2.0 * c_[0]; }
    QubitOperator adjoint() const {
        return {std::conj(c_[0]), std::conj(c_[1]), std::conj(c_[2]), std::conj(c_[3])};
    }

    bool is_hermitian(double tol = 1e-14) const;
    bool is_unitary(double tol = 1e-12) const;
    /// Largest coefficient modulus of (this - other).
    double distance(const QubitOperator& other) const;

    QubitOperator operator*(const QubitOperator& rhs) const;
    QubitOperator operator+(const QubitOperator& rhs) const;
    QubitOperator operator-(const QubitOperator& rhs) const;
    QubitOperator operator*(cplx s) const;
    friend QubitOperator operator*(cplx s, const QubitOperator& op) { return op * s; }

private:
    std::array<cplx, 4> c_{};
};

/// Bloch vector s = tr(sigma rho) at time t (units 1/Delta).
struct BlochState {
    Vec3 s = Vec3::Zero();
    double t = 0.0;

    double norm() const { return s.norm(); }
    /// S = 1 - tr(rho^2) = (1 - s.s)/2.
    double linear_entropy() const { return 0.5 * (1.0 - s.squaredNorm()); }
};

/// Density operator (1 + s.sigma)/2 of a Bloch vector.
QubitOperator density_from_bloch(const Vec3& s);

/// s_k = tr(sigma_k rho). Throws InvalidState unless rho is Hermitian with
/// unit trace and |s| <= 1.
BlochState bloch_from_density(const QubitOperator& rho, double t = 0.0);

/// exp(-i (angle/2) axis.sigma). Throws std::domain_error unless |axis| = 1.
QubitOperator pauli_rotation(const Vec3& axis, double angle);

/// u^dagger op u. Throws std::domain_error for non-unitary u.
QubitOperator conjugate(const QubitOperator& op, const QubitOperator& u);

/// The SO(3) matrix R with conjugate(v.sigma, u) = (R v).sigma for unitary u.
Mat3 adjoint_rotation(const QubitOperator& u);

}  // namespace qcstab
