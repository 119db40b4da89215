// dynamics.hpp: Bloch-vector equation of motion, its spectrum, steady state
// and entropy diagnostics

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qcstab/bath.hpp"
#include "qcstab/driving.hpp"
#include "qcstab/qubit_algebra.hpp"
#include "qcstab/rates.hpp"

namespace qcstab {

/// ds/dt = -M s + b.
///
/// M = [h(t)]_x + diag(0, Gamma_eff, Gamma_eff), where [h]_x v = h x v and
/// h(t) is the coherent field of the drive. With h = (0, 0, Delta) this is
/// the undriven matrix [[0,-D,0],[D,G,0],[0,0,G]]; the dissipative part only
/// damps s_y and s_z. b = (0, 0, -pi alpha Delta) for every drive.
struct BlochGenerator {
    Mat3 M = Mat3::Zero();
    Vec3 b = Vec3::Zero();

    Vec3 rate_of_change(const Vec3& s) const { return -M * s + b; }
    /// Entropy production dS/dt = -s.ds/dt = s.M s - s.b.
    double entropy_production(const Vec3& s) const { return s.dot(M * s) - s.dot(b); }
};

/// Bath + drive with Gamma_eff evaluated once; generator(t) is then cheap.
class BlochModel {
public:
    BlochModel(const BathSpec& bath, const Drive& drive, int n_max = kDefaultSeriesTerms);

    BlochGenerator generator(double t) const;
    double gamma_eff() const { return gamma_eff_; }
    const BathSpec& bath() const { return bath_; }
    const Drive& drive() const { return drive_; }

private:
    BathSpec bath_;
    Drive drive_;
    double gamma_eff_;
};

BlochGenerator assemble_generator(const BathSpec& bath, const Drive& drive, double t,
                                  int n_max = kDefaultSeriesTerms);

struct TrajectorySample {
    double t = 0.0;
    Vec3 s = Vec3::Zero();
    double entropy = 0.0;             // (1 - s.s)/2
    double entropy_production = 0.0;  // s.M(t)s - s.b
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    /// Largest |s| seen at any accepted integration step.
    double max_norm = 0.0;
    /// |s| exceeded 1 + 100 tol in a dissipative run. The weak-coupling
    /// equation is not completely positive, so states near the x axis can
    /// leave the Bloch ball slightly.
    bool purity_violation = false;
};

/// Thrown by evolve when the state leaves the admissible region; carries
/// the samples produced up to that point.
class IntegrationDiverged : public std::runtime_error {
public:
    IntegrationDiverged(const std::string& what, Trajectory partial, double t_fail)
        : std::runtime_error(what), partial_(std::move(partial)), t_fail_(t_fail) {}
    const Trajectory& partial() const { return partial_; }
    double time() const { return t_fail_; }

private:
    Trajectory partial_;
    double t_fail_;
};

class NoSteadyState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bloch norm above which a dissipative run counts as diverged.
inline constexpr double kMaxBlochNorm = 2.0;

struct EvolveOptions {
    double t_max = 10.0;   // duration, measured from s0.t
    double dt_out = 0.1;
    double tol = 1e-9;     // absolute and relative per-step error
    int n_max = kDefaultSeriesTerms;
};

/// Integrates the (possibly time-dependent) Bloch equation with an adaptive
/// Dormand-Prince 5(4) pair and dense output, sampling every dt_out from s0.t
/// to s0.t + t_max inclusive.
///
/// Divergence: a non-finite state, |s| > 1 + 100 tol when alpha = 0 (the
/// dynamics is then unitary), or |s| > kMaxBlochNorm otherwise.
Trajectory evolve(const BathSpec& bath, const Drive& drive, const BlochState& s0,
                  const EvolveOptions& options);

/// Undriven fixed point M^-1 b = (0, 0, -tanh(Delta/2T)).
/// Throws NoSteadyState when Gamma = 0.
BlochState steady_state(const BathSpec& bath);

struct DecaySpectrum {
    /// {Gamma, (Gamma + sqrt(Gamma^2 - 4 Delta^2))/2, (Gamma - sqrt(...))/2}
    std::array<cplx, 3> exact;
    /// {Gamma, Gamma/2 + i Delta, Gamma/2 - i Delta}
    std::array<cplx, 3> weak_damping;
    double gamma = 0.0;
    /// Gamma > 2 Delta: outside the weak-damping regime.
    bool overdamped = false;
};

DecaySpectrum decay_eigenvalues(const BathSpec& bath);

struct MonteCarloEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Average entropy production over pure states drawn uniformly on the
/// Bloch sphere (normalised Gaussian triples, mt19937_64 seeded with seed).
/// Throws std::domain_error for n_samples < 1000.
MonteCarloEstimate average_entropy_production(const BathSpec& bath, const Drive& drive, double t,
                                              int n_samples, std::uint64_t seed,
                                              int n_max = kDefaultSeriesTerms);

}  // namespace qcstab
