// rates.hpp: closed-form decoherence rates and coherence measures

#pragma once

#include <optional>
#include <string_view>

#include "qcstab/bath.hpp"
#include "qcstab/driving.hpp"

namespace qcstab {

inline constexpr int kDefaultSeriesTerms = 64;
/// Reported in place of eta when the driven rate vanishes.
inline constexpr double kEtaCap = 1e300;

/// Gamma = S(Delta)/2 = pi alpha Delta coth(Delta/2T).
double rate_static(const BathSpec& bath);

/// Gamma_CDT = S(|Delta_eff|)/2; 2 pi alpha T at a Bessel zero.
double rate_cdt(const Drive& drive, const BathSpec& bath);

/// Gamma_DD = Gamma {J0^2(x) + 2 sum_n (n Omega/Delta) tanh(Delta/2T)/tanh(n Omega/2T)
///                    exp(-n Omega/omega_c) J_n^2(x)}
/// with the truncation rule of effective_coupling_dd. Throws std::domain_error
/// for n_max < 1 or a non-DD drive.
double rate_dd(const Drive& drive, const BathSpec& bath, int n_max = kDefaultSeriesTerms);

/// Gamma_eff for any drive kind (Gamma, Gamma_CDT or Gamma_DD).
double effective_rate(const BathSpec& bath, const Drive& drive, int n_max = kDefaultSeriesTerms);

struct TraceBound {
    double gamma = 0.0;      // tr M = 2 Gamma_eff
    double gamma_avg = 0.0;  // gamma / 3
};
/// Throws std::domain_error for a negative rate.
TraceBound trace_bound(double rate_eff);

struct Eta {
    double value = 0.0;
    bool capped = false;  // driven rate vanished; value == kEtaCap
};

/// eta = (Gamma/2) / gamma_DD with gamma_DD = 2 Gamma_DD. DD drives only.
Eta stabilization_eta(const BathSpec& bath, const Drive& drive, int n_max = kDefaultSeriesTerms);

/// The same ratio with gamma_CDT in the denominator. CDT drives only.
Eta eta_cdt(const BathSpec& bath, const Drive& drive);

struct RateReport {
    DriveKind drive_kind = DriveKind::None;
    double gamma_relax = 0.0;
    double delta_eff = 0.0;
    double gamma_trace = 0.0;
    double gamma_avg = 0.0;
    /// eta for DD, eta_cdt for CDT, empty when undriven.
    std::optional<Eta> eta;
    std::string_view eta_name() const;
};

RateReport rate_report(const BathSpec& bath, const Drive& drive, int n_max = kDefaultSeriesTerms);

}  // namespace qcstab
