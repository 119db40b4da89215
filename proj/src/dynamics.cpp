// dynamics.cpp: Bloch equation integration and diagnostics

#include "qcstab/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace qcstab {

namespace {

using OdeState = std::array<double, 3>;

// Step error target relative to the requested tol; local errors add up
// over long runs, so steps are controlled tighter than tol itself.
constexpr double kStepTolFactor = 0.01;
constexpr double kMinStepTol = 1e-14;

Vec3 to_vec(const OdeState& x) { return {x[0], x[1], x[2]}; }

double relaxation_drive(const BathSpec& bath) { return std::numbers::pi * bath.alpha * kDelta; }

TrajectorySample make_sample(const BlochModel& model, double t, const Vec3& s) {
    const auto gen = model.generator(t);
    return {t, s, 0.5 * (1.0 - s.squaredNorm()), gen.entropy_production(s)};
}

}  // namespace

BlochModel::BlochModel(const BathSpec& bath, const Drive& drive, int n_max)
    : bath_(bath), drive_(drive), gamma_eff_(0.0) {
    bath_.validate();
    drive_.validate();
    gamma_eff_ = effective_rate(bath_, drive_, n_max);
}

BlochGenerator BlochModel::generator(double t) const {
    const Vec3 h = coherent_field(drive_, t);
    BlochGenerator gen;
    gen.M << 0.0, -h.z(), h.y(),
             h.z(), gamma_eff_, -h.x(),
             -h.y(), h.x(), gamma_eff_;
    gen.b = Vec3(0.0, 0.0, -relaxation_drive(bath_));
    return gen;
}

BlochGenerator assemble_generator(const BathSpec& bath, const Drive& drive, double t, int n_max) {
    return BlochModel(bath, drive, n_max).generator(t);
}

Trajectory evolve(const BathSpec& bath, const Drive& drive, const BlochState& s0,
                  const EvolveOptions& options) {
    namespace odeint = boost::numeric::odeint;

    if (!(s0.norm() <= 1.0 + 1e-12)) {
        throw std::invalid_argument("evolve: initial Bloch vector must satisfy |s0| <= 1");
    }
    if (!(options.t_max > 0.0) || !(options.dt_out > 0.0)) {
        throw std::invalid_argument("evolve: t_max and dt_out must be > 0");
    }
    if (!(options.tol >= 1e-12 && options.tol <= 1e-4)) {
        throw std::invalid_argument("evolve: tol must lie in [1e-12, 1e-4]");
    }

    const BlochModel model(bath, drive, options.n_max);
    const double norm_limit =
        bath.alpha == 0.0 ? 1.0 + 100.0 * options.tol : kMaxBlochNorm;
    const double t_start = s0.t;
    const double t_end = s0.t + options.t_max;

    std::vector<double> out_times;
    const auto n_uniform = static_cast<long>(std::floor(options.t_max / options.dt_out + 1e-9));
    out_times.reserve(static_cast<std::size_t>(n_uniform) + 2);
    for (long k = 0; k <= n_uniform; ++k) out_times.push_back(t_start + k * options.dt_out);
    if (t_end - out_times.back() > 1e-12 * std::max(1.0, t_end)) out_times.push_back(t_end);

    auto rhs = [&model](const OdeState& x, OdeState& dxdt, double t) {
        const Vec3 d = model.generator(t).rate_of_change(to_vec(x));
        dxdt = {d.x(), d.y(), d.z()};
    };

    const double fastest = coherent_field(drive, 0.0).norm() + 2.0 * drive.amplitude +
                           model.gamma_eff() + kDelta;
    const double dt0 = std::min(options.dt_out, 0.01 / fastest);

    const double step_tol = std::max(kMinStepTol, kStepTolFactor * options.tol);
    auto stepper = odeint::make_dense_output(step_tol, step_tol,
                                             odeint::runge_kutta_dopri5<OdeState>());
    stepper.initialize(OdeState{s0.s.x(), s0.s.y(), s0.s.z()}, t_start, dt0);

    Trajectory traj;
    traj.samples.reserve(out_times.size());
    traj.max_norm = s0.norm();
    const double purity_limit = 1.0 + 100.0 * options.tol;

    auto check = [&](const Vec3& s, double t) {
        const double norm = s.norm();
        if (!std::isfinite(norm) || norm > norm_limit) {
            std::ostringstream os;
            os << "integration diverged at t = " << t << " (|s| = " << norm << ")";
            throw IntegrationDiverged(os.str(), traj, t);
        }
        traj.max_norm = std::max(traj.max_norm, norm);
        if (norm > purity_limit) traj.purity_violation = true;
    };

    OdeState x{};
    for (double t_out : out_times) {
        while (stepper.current_time() < t_out) {
            stepper.do_step(rhs);
            check(to_vec(stepper.current_state()), stepper.current_time());
        }
        // dense output is only defined once a step has been taken
        if (t_out == t_start) {
            x = stepper.current_state();
        } else {
            stepper.calc_state(t_out, x);
        }
        const Vec3 s = to_vec(x);
        check(s, t_out);
        traj.samples.push_back(make_sample(model, t_out, s));
    }
    return traj;
}

BlochState steady_state(const BathSpec& bath) {
    bath.validate();
    const double gamma = rate_static(bath);
    if (!(gamma > 0.0)) {
        throw NoSteadyState("steady_state: relaxation rate vanishes");
    }
    return {Vec3(0.0, 0.0, -relaxation_drive(bath) / gamma), 0.0};
}

DecaySpectrum decay_eigenvalues(const BathSpec& bath) {
    DecaySpectrum out;
    const double gamma = rate_static(bath);
    const cplx root = std::sqrt(cplx(gamma * gamma - 4.0 * kDelta * kDelta, 0.0));
    out.gamma = gamma;
    out.exact = {cplx(gamma, 0.0), 0.5 * (gamma + root), 0.5 * (gamma - root)};
    out.weak_damping = {cplx(gamma, 0.0), cplx(0.5 * gamma, kDelta), cplx(0.5 * gamma, -kDelta)};
    out.overdamped = gamma > 2.0 * kDelta;
    return out;
}

MonteCarloEstimate average_entropy_production(const BathSpec& bath, const Drive& drive, double t,
                                              int n_samples, std::uint64_t seed, int n_max) {
    if (n_samples < 1000) {
        throw std::domain_error("average_entropy_production: n_samples must be >= 1000");
    }
    const auto gen = assemble_generator(bath, drive, t, n_max);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    // Welford accumulation
    double mean = 0.0;
    double m2 = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        Vec3 s;
        do {
            s = Vec3(normal(rng), normal(rng), normal(rng));
        } while (s.squaredNorm() == 0.0);
        s.normalize();
        const double value = gen.entropy_production(s);
        const double delta = value - mean;
        mean += delta / (i + 1);
        m2 += delta * (value - mean);
    }
    const double variance = m2 / (n_samples - 1);
    return {mean, std::sqrt(variance / n_samples)};
}

}  // namespace qcstab
