// bath.cpp: Ohmic spectral density and power spectrum

#include "qcstab/bath.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcstab/qubit_algebra.hpp"

namespace qcstab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSmallCothArgument = 1e-6;

void require_frequency(double omega, const char* who) {
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw std::domain_error(std::string(who) + ": frequency must be finite and >= 0");
    }
}

}  // namespace

void BathSpec::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::invalid_argument("bath: alpha must be finite and >= 0");
    }
    if (!std::isfinite(omega_c) || omega_c <= 0.0) {
        throw std::invalid_argument("bath: omega_c must be finite and > 0");
    }
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw std::invalid_argument("bath: temperature must be finite and >= 0");
    }
}

double BathSpec::beta() const {
    return zero_temperature() ? std::numeric_limits<double>::infinity() : 1.0 / temperature;
}

std::vector<std::string> BathSpec::validity_warnings() const {
    std::vector<std::string> out;
    if (alpha * std::log(omega_c / kDelta) > 0.1) {
        std::ostringstream os;
        os << "weak coupling violated: alpha*ln(omega_c/Delta) = "
           << alpha * std::log(omega_c / kDelta) << " > 0.1";
        out.push_back(os.str());
    }
    if (omega_c <= kDelta) {
        out.push_back("cutoff omega_c does not exceed the qubit splitting");
    }
    return out;
}

double spectral_density(const BathSpec& bath, double omega) {
    require_frequency(omega, "spectral_density");
    return kTwoPi * bath.alpha * omega * std::exp(-omega / bath.omega_c);
}

double power_spectrum(const BathSpec& bath, double omega) {
    require_frequency(omega, "power_spectrum");
    if (bath.zero_temperature()) {
        return kTwoPi * bath.alpha * omega;
    }
    const double x = omega / (2.0 * bath.temperature);
    if (x < kSmallCothArgument) {
        // omega * coth(x) = 2T x coth(x) ~ 2T (1 + x^2/3)
        return kTwoPi * bath.alpha * 2.0 * bath.temperature * (1.0 + x * x / 3.0);
    }
    return kTwoPi * bath.alpha * omega / std::tanh(x);
}

}  // namespace qcstab
