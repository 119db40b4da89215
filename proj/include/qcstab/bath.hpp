// bath.hpp: Ohmic heat bath: spectral density and power spectrum

#pragma once

#include <string>
#include <vector>

namespace qcstab {

/// Ohmic bath, J(w) = 2 pi alpha w exp(-w/omega_c), at temperature T.
///
/// temperature == 0 is the zero-temperature limit (beta infinite) and is
/// handled by exact branches, never by a large finite beta. alpha = 0 is a
/// decoupled qubit and is allowed.
struct BathSpec {
    double alpha = 0.01;
    double omega_c = 500.0;
    double temperature = 1.0;

    /// Throws std::invalid_argument for negative or non-finite parameters.
    void validate() const;

    bool zero_temperature() const { return temperature == 0.0; }
    /// 1/T; +inf at T = 0.
    double beta() const;

    /// Weak-coupling and scale-separation warnings; empty when the
    /// parameters sit inside the regime the rate formulas assume.
    std::vector<std::string> validity_warnings() const;
};

/// 2 pi alpha w exp(-w/omega_c). Throws std::domain_error for w < 0.
double spectral_density(const BathSpec& bath, double omega);

/// Fourier transform of the symmetrised bath correlation,
/// S(w) = 2 pi alpha w coth(w/2T), without the cutoff factor.
///
/// Limits: 4 pi alpha T at w = 0 and 2 pi alpha w at T = 0. Below
/// w/2T = 1e-6 the coth is replaced by 1/x + x/3.
/// Throws std::domain_error for w < 0.
double power_spectrum(const BathSpec& bath, double omega);

}  // namespace qcstab
