// rates.cpp: closed-form decoherence rates

#include "qcstab/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace qcstab {

namespace {

constexpr double kSeriesRelTol = 1e-14;

// tanh(Delta/2T) / tanh(w/2T); both factors are 1 at T = 0.
double tanh_ratio(const BathSpec& bath, double omega) {
    if (bath.zero_temperature()) return 1.0;
    const double two_t = 2.0 * bath.temperature;
    return std::tanh(kDelta / two_t) / std::tanh(omega / two_t);
}

Eta ratio_eta(double gamma_static, double gamma_driven) {
    if (!(gamma_driven > 0.0)) return {kEtaCap, true};
    return {gamma_static / (4.0 * gamma_driven), false};
}

}  // namespace

double rate_static(const BathSpec& bath) { return 0.5 * power_spectrum(bath, kDelta); }

double rate_cdt(const Drive& drive, const BathSpec& bath) {
    if (drive.kind != DriveKind::CDT) {
        throw std::domain_error("rate_cdt: drive kind must be cdt");
    }
    return 0.5 * power_spectrum(bath, std::abs(effective_splitting(drive)));
}

double rate_dd(const Drive& drive, const BathSpec& bath, int n_max) {
    if (drive.kind != DriveKind::DD) {
        throw std::domain_error("rate_dd: drive kind must be dd");
    }
    if (n_max < 1) {
        throw std::domain_error("rate_dd: n_max must be >= 1");
    }
    const double x = drive.amp_ratio();
    const double j0 = bessel_j(0, x);
    double harmonics = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double freq = n * drive.omega;
        const double jn = bessel_j(n, x);
        const double term = 2.0 * (freq / kDelta) * tanh_ratio(bath, freq) *
                            std::exp(-freq / bath.omega_c) * jn * jn;
        harmonics += term;
        if (n > x && term <= kSeriesRelTol * harmonics) break;
    }
    return rate_static(bath) * (j0 * j0 + harmonics);
}

double effective_rate(const BathSpec& bath, const Drive& drive, int n_max) {
    switch (drive.kind) {
        case DriveKind::CDT: return rate_cdt(drive, bath);
        case DriveKind::DD: return rate_dd(drive, bath, n_max);
        case DriveKind::None: break;
    }
    return rate_static(bath);
}

TraceBound trace_bound(double rate_eff) {
    if (!(rate_eff >= 0.0)) {
        throw std::domain_error("trace_bound: rate must be >= 0");
    }
    const double gamma = 2.0 * rate_eff;
    return {gamma, gamma / 3.0};
}

Eta stabilization_eta(const BathSpec& bath, const Drive& drive, int n_max) {
    return ratio_eta(rate_static(bath), rate_dd(drive, bath, n_max));
}

Eta eta_cdt(const BathSpec& bath, const Drive& drive) {
    return ratio_eta(rate_static(bath), rate_cdt(drive, bath));
}

std::string_view RateReport::eta_name() const {
    return drive_kind == DriveKind::CDT ? "eta_cdt" : "eta";
}

RateReport rate_report(const BathSpec& bath, const Drive& drive, int n_max) {
    RateReport report;
    report.drive_kind = drive.kind;
    report.delta_eff = effective_splitting(drive);
    report.gamma_relax = effective_rate(bath, drive, n_max);
    const auto bound = trace_bound(report.gamma_relax);
    report.gamma_trace = bound.gamma;
    report.gamma_avg = bound.gamma_avg;
    if (drive.kind != DriveKind::None) {
        report.eta = ratio_eta(rate_static(bath), report.gamma_relax);
    }
    return report;
}

}  // namespace qcstab
