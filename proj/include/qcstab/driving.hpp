// driving.hpp: harmonic driving fields, high-frequency propagators and the
// effective dissipative coupling operator Q

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcstab/bath.hpp"
#include "qcstab/qubit_algebra.hpp"

namespace qcstab {

/// None: undriven. CDT: H_D = A sx cos(Omega t). DD: H_D = A sz cos(Omega t).
enum class DriveKind { None, CDT, DD };

std::string_view to_string(DriveKind kind);
/// Accepts "none", "cdt", "dd" (case-insensitive); throws std::invalid_argument.
DriveKind parse_drive_kind(std::string_view text);

struct Drive {
    DriveKind kind = DriveKind::None;
    double amplitude = 0.0;  // A, in hbar*Delta
    double omega = 0.0;      // Omega, in Delta

    static Drive none() { return {}; }
    /// Builds a drive from the dimensionless strength x = 2A/(hbar Omega).
    static Drive from_ratio(DriveKind kind, double amp_ratio, double omega);
    static Drive cdt(double amp_ratio, double omega) { return from_ratio(DriveKind::CDT, amp_ratio, omega); }
    static Drive dd(double amp_ratio, double omega) { return from_ratio(DriveKind::DD, amp_ratio, omega); }

    /// x = 2A/Omega; zero for an undriven qubit.
    double amp_ratio() const;
    double period() const;

    void validate() const;
    /// Flags driving frequencies below 10 Delta, outside the high-frequency regime.
    std::vector<std::string> validity_warnings() const;
};

/// Coherent field h(t) with H_qb + H_D(t) = h(t).sigma / 2.
Vec3 coherent_field(const Drive& drive, double t);

/// Bessel function of the first kind J_n(x), n >= 0.
double bessel_j(int n, double x);

/// Delta_eff = J0(2A/Omega) Delta for CDT; Delta otherwise.
double effective_splitting(const Drive& drive);

/// High-frequency CDT propagator U(t, t0) = U0(t) exp(-i Delta_eff (t-t0) sz/2) U0(t0)^dagger
/// with U0(t) = exp(-i (A/Omega) sin(Omega t) sx). Throws std::domain_error
/// unless drive.kind == CDT.
QubitOperator cdt_propagator(const Drive& drive, double t, double t0);

/// Exact DD propagator exp(-i (A/Omega)[sin Omega t - sin Omega t0] sz) exp(-i Delta (t-t0) sz/2).
/// Throws std::domain_error unless drive.kind == DD.
QubitOperator dd_propagator(const Drive& drive, double t, double t0);

/// Dispatches on the drive kind; the undriven case is free precession.
QubitOperator propagator(const Drive& drive, double t, double t0);

/// Floquet exponent of a one-period propagator, U(T) = exp(-i quasienergy T axis.sigma/2),
/// with the quasienergy folded into (-Omega/2, Omega/2].
struct FloquetExponent {
    double quasienergy = 0.0;
    Vec3 axis = Vec3::UnitZ();
};
FloquetExponent floquet_exponent(const QubitOperator& one_period, double period);

/// Q_CDT = S(|Delta_eff|)/2 sx.
QubitOperator effective_coupling_cdt(const Drive& drive, const BathSpec& bath);

/// Q_DD = sx/2 [J0^2(x) S(Delta) + 2 sum_{n=1}^{n_max} J_n^2(x) S(n Omega) exp(-n Omega/omega_c)].
///
/// The sum stops early once n > x and a term falls below 1e-14 of the
/// running total. Throws std::domain_error for n_max < 1.
QubitOperator effective_coupling_dd(const Drive& drive, const BathSpec& bath, int n_max);

/// Numerical evaluation of the period-averaged coupling operator
///   Q = (1/T) int_0^T dt int_0^inf dtau S(tau) U^dagger(t-tau,t) sx U(t-tau,t)
/// in the frequency domain, without Bessel functions.
///
/// The propagator is factorised as U(t,t') = P(t) F(t-t') P(t')^dagger with
/// F read off the one-period propagator. The periodic part is Fourier
/// analysed over one driving period on grid_t points (|n| <= n_harmonics),
/// the Floquet rotation splits every harmonic into n Omega and n Omega +- eps,
/// and each frequency w of harmonic n is weighted by S(|w|)/2 exp(-|n| Omega/omega_c).
/// Principal-value (Lamb shift) parts are dropped. Returns the Hermitian Q;
/// throws std::logic_error if its off-sx components exceed 1e-8 (relative
/// to max(1, |Q_x|)).
QubitOperator numeric_q_oracle(const Drive& drive, const BathSpec& bath, int grid_t,
                               int n_harmonics);

}  // namespace qcstab
