// driving.cpp: drive definitions, propagators and effective coupling

#include "qcstab/driving.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>

namespace qcstab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSeriesRelTol = 1e-14;

const Vec3 kAxisX = Vec3::UnitX();
const Vec3 kAxisZ = Vec3::UnitZ();

void require_kind(const Drive& drive, DriveKind kind, const char* who) {
    if (drive.kind != kind) {
        throw std::domain_error(std::string(who) + ": wrong drive kind '" +
                                std::string(to_string(drive.kind)) + "'");
    }
}

Eigen::Matrix3cd cross_matrix(const Vec3& n) {
    Eigen::Matrix3cd m;
    m << 0.0, -n.z(), n.y(),
         n.z(), 0.0, -n.x(),
         -n.y(), n.x(), 0.0;
    return m;
}

}  // namespace

std::string_view to_string(DriveKind kind) {
    switch (kind) {
        case DriveKind::None: return "none";
        case DriveKind::CDT: return "cdt";
        case DriveKind::DD: return "dd";
    }
    return "unknown";
}

DriveKind parse_drive_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "none") return DriveKind::None;
    if (lower == "cdt") return DriveKind::CDT;
    if (lower == "dd") return DriveKind::DD;
    throw std::invalid_argument("unknown drive kind '" + std::string(text) +
                                "' (expected none, cdt or dd)");
}

Drive Drive::from_ratio(DriveKind kind, double amp_ratio, double omega) {
    return {kind, 0.5 * amp_ratio * omega, omega};
}

double Drive::amp_ratio() const {
    return kind == DriveKind::None ? 0.0 : 2.0 * amplitude / omega;
}

double Drive::period() const { return kTwoPi / omega; }

void Drive::validate() const {
    if (kind == DriveKind::None) return;
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("drive: omega must be finite and > 0");
    }
    if (!std::isfinite(amplitude) || amplitude < 0.0) {
        throw std::invalid_argument("drive: amplitude must be finite and >= 0");
    }
}

std::vector<std::string> Drive::validity_warnings() const {
    std::vector<std::string> out;
    if (kind != DriveKind::None && omega < 10.0 * kDelta) {
        std::ostringstream os;
        os << "high-frequency approximation questionable: Omega = " << omega
           << " < 10 Delta";
        out.push_back(os.str());
    }
    return out;
}

Vec3 coherent_field(const Drive& drive, double t) {
    const double modulation =
        drive.kind == DriveKind::None ? 0.0 : 2.0 * drive.amplitude * std::cos(drive.omega * t);
    switch (drive.kind) {
        case DriveKind::CDT: return {modulation, 0.0, kDelta};
        case DriveKind::DD: return {0.0, 0.0, kDelta + modulation};
        case DriveKind::None: break;
    }
    return {0.0, 0.0, kDelta};
}

double bessel_j(int n, double x) {
    if (n < 0) {
        throw std::domain_error("bessel_j: order must be >= 0");
    }
    const double value = boost::math::cyl_bessel_j(n, std::abs(x));
    return (x < 0.0 && (n % 2 == 1)) ? -value : value;
}

double effective_splitting(const Drive& drive) {
    if (drive.kind != DriveKind::CDT) return kDelta;
    return bessel_j(0, drive.amp_ratio()) * kDelta;
}

QubitOperator cdt_propagator(const Drive& drive, double t, double t0) {
    require_kind(drive, DriveKind::CDT, "cdt_propagator");
    const double x = drive.amp_ratio();
    const auto frame_t = pauli_rotation(kAxisX, x * std::sin(drive.omega * t));
    const auto frame_t0 = pauli_rotation(kAxisX, -x * std::sin(drive.omega * t0));
    return frame_t * pauli_rotation(kAxisZ, effective_splitting(drive) * (t - t0)) * frame_t0;
}

QubitOperator dd_propagator(const Drive& drive, double t, double t0) {
    require_kind(drive, DriveKind::DD, "dd_propagator");
    const double x = drive.amp_ratio();
    const double phase = x * (std::sin(drive.omega * t) - std::sin(drive.omega * t0));
    return pauli_rotation(kAxisZ, phase) * pauli_rotation(kAxisZ, kDelta * (t - t0));
}

QubitOperator propagator(const Drive& drive, double t, double t0) {
    switch (drive.kind) {
        case DriveKind::CDT: return cdt_propagator(drive, t, t0);
        case DriveKind::DD: return dd_propagator(drive, t, t0);
        case DriveKind::None: break;
    }
    return pauli_rotation(kAxisZ, kDelta * (t - t0));
}

FloquetExponent floquet_exponent(const QubitOperator& one_period, double period) {
    // U = cos(th/2) - i sin(th/2) n.sigma, up to a global sign
    const Vec3 v{-one_period.cx().imag(), -one_period.cy().imag(), -one_period.cz().imag()};
    const double sin_half = v.norm();
    FloquetExponent out;
    if (sin_half < 1e-15) return out;
    double angle = 2.0 * std::atan2(sin_half, one_period.c0().real());
    if (angle > std::numbers::pi) angle -= kTwoPi;
    out.axis = v / sin_half;
    out.quasienergy = angle / period;
    return out;
}

QubitOperator effective_coupling_cdt(const Drive& drive, const BathSpec& bath) {
    require_kind(drive, DriveKind::CDT, "effective_coupling_cdt");
    const double coefficient = 0.5 * power_spectrum(bath, std::abs(effective_splitting(drive)));
    return QubitOperator::sigma_x() * coefficient;
}

QubitOperator effective_coupling_dd(const Drive& drive, const BathSpec& bath, int n_max) {
    require_kind(drive, DriveKind::DD, "effective_coupling_dd");
    if (n_max < 1) {
        throw std::domain_error("effective_coupling_dd: n_max must be >= 1");
    }
    const double x = drive.amp_ratio();
    const double j0 = bessel_j(0, x);
    double harmonics = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double freq = n * drive.omega;
        const double jn = bessel_j(n, x);
        const double term = 2.0 * jn * jn * power_spectrum(bath, freq) * std::exp(-freq / bath.omega_c);
        harmonics += term;
        if (n > x && term <= kSeriesRelTol * harmonics) break;
    }
    const double coefficient = 0.5 * (j0 * j0 * power_spectrum(bath, kDelta) + harmonics);
    return QubitOperator::sigma_x() * coefficient;
}

QubitOperator numeric_q_oracle(const Drive& drive, const BathSpec& bath, int grid_t,
                               int n_harmonics) {
    if (drive.kind == DriveKind::None) {
        throw std::domain_error("numeric_q_oracle: requires a CDT or DD drive");
    }
    if (grid_t < 64 || n_harmonics < 8) {
        throw std::domain_error("numeric_q_oracle: need grid_t >= 64 and n_harmonics >= 8");
    }
    const double period = drive.period();
    const int n_grid = std::max(grid_t, 4 * n_harmonics);
    const auto floquet = floquet_exponent(propagator(drive, period, 0.0), period);
    const double eps = floquet.quasienergy;
    const Vec3& axis = floquet.axis;

    // P(t) = U(t,0) F(t)^dagger, periodic with P(0) = 1
    auto periodic_part = [&](double t) {
        return propagator(drive, t, 0.0) * pauli_rotation(axis, eps * t).adjoint();
    };

    const int n_freq = 2 * n_harmonics + 1;
    std::vector<Eigen::Vector3cd> g_hat(n_freq, Eigen::Vector3cd::Zero());
    std::vector<Eigen::Matrix3cd> frame_avg(n_freq, Eigen::Matrix3cd::Zero());
    for (int j = 0; j < n_grid; ++j) {
        const double t = period * j / n_grid;
        const auto p = periodic_part(t);
        // G(t) = P^dagger sx P and the frame map Y -> P Y P^dagger
        const Vec3 g = conjugate(QubitOperator::sigma_x(), p).vector_part();
        const Mat3 frame = adjoint_rotation(p.adjoint());
        for (int k = 0; k < n_freq; ++k) {
            const int n = k - n_harmonics;
            const cplx phase = std::polar(1.0, n * drive.omega * t);
            g_hat[k] += g.cast<cplx>() * std::conj(phase);
            frame_avg[k] += frame.cast<cplx>() * phase;
        }
    }
    for (int k = 0; k < n_freq; ++k) {
        g_hat[k] /= static_cast<double>(n_grid);
        frame_avg[k] /= static_cast<double>(n_grid);
    }

    // Rot(axis, phi) = P0 + e^{i phi} Pp + e^{-i phi} Pm
    const Eigen::Matrix3cd along = (axis * axis.transpose()).cast<cplx>();
    const Eigen::Matrix3cd plus =
        0.5 * (Eigen::Matrix3cd::Identity() - along) - cplx(0.0, 0.5) * cross_matrix(axis);
    const Eigen::Matrix3cd minus = plus.conjugate();
    const std::array<std::pair<int, Eigen::Matrix3cd>, 3> rotation_parts{
        {{-1, minus}, {0, along}, {1, plus}}};

    Eigen::Vector3cd q = Eigen::Vector3cd::Zero();
    for (int k = 0; k < n_freq; ++k) {
        const int n = k - n_harmonics;
        const double cutoff = std::exp(-std::abs(n) * drive.omega / bath.omega_c);
        for (const auto& [m, proj] : rotation_parts) {
            const double freq = std::abs(m * eps - n * drive.omega);
            const double weight = 0.5 * power_spectrum(bath, freq) * cutoff;
            if (weight == 0.0) continue;
            q += weight * (frame_avg[k] * (proj * g_hat[k]));
        }
    }

    const Vec3 qr = q.real();
    const double scale = std::max(1.0, std::abs(qr.x()));
    if (std::abs(qr.y()) > 1e-8 * scale || std::abs(qr.z()) > 1e-8 * scale) {
        std::ostringstream os;
        os << "numeric_q_oracle: Q is not proportional to sx (components " << qr.transpose()
           << ")";
        throw std::logic_error(os.str());
    }
    return QubitOperator::from_vector(qr);
}

}  // namespace qcstab
