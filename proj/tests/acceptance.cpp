// acceptance.cpp: one PASS/FAIL line per acceptance criterion

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qcstab/bath.hpp"
#include "qcstab/driving.hpp"
#include "qcstab/dynamics.hpp"
#include "qcstab/rates.hpp"
#include "qcstab/scan/cli.hpp"
#include "qcstab/scan/config.hpp"

using namespace qcstab;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

Outcome undriven_rates() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_alpha(-4.0, -1.0);
    std::uniform_real_distribution<double> log_t(-2.0, 2.0);
    double worst = 0.0;
    bool exact = true;
    for (int i = 0; i < 20; ++i) {
        const BathSpec bath{std::pow(10.0, log_alpha(rng)), 500.0, std::pow(10.0, log_t(rng))};
        const double closed = pi * bath.alpha * kDelta / std::tanh(kDelta / (2 * bath.temperature));
        const double half_s = 0.5 * power_spectrum(bath, kDelta);
        worst = std::max(worst, std::abs(closed - half_s) / closed);
        const double gamma = rate_static(bath);
        const TraceBound tb = trace_bound(gamma);
        const double trace_m = assemble_generator(bath, Drive::none(), 0.0).M.trace();
        exact = exact && tb.gamma == 2 * gamma && tb.gamma_avg == tb.gamma / 3 &&
                trace_m == tb.gamma;
    }
    return {worst <= 1e-14 && exact,
            fmt("max rel err %.2e (tol 1e-14); gamma = 2 Gamma = tr M, Gamma_av = gamma/3 exact: ",
                worst) +
                (exact ? "yes" : "no")};
}

Outcome eigenvalues() {
    const BathSpec bath{0.01, 500.0, 1.0};
    const double gamma = rate_static(bath);
    const Mat3 m = assemble_generator(bath, Drive::none(), 0.0).M;
    const Eigen::Vector3cd ev = Eigen::EigenSolver<Mat3>(m).eigenvalues();
    const std::complex<double> weak[3] = {
        {gamma, 0.0}, {gamma / 2, kDelta}, {gamma / 2, -kDelta}};
    double worst = 0.0;
    for (const auto& p : weak) {
        double best = 1e300;
        for (int k = 0; k < 3; ++k) best = std::min(best, std::abs(ev[k] - p));
        worst = std::max(worst, best);
    }
    const double bound = gamma * gamma / (2 * kDelta);
    return {worst <= bound, fmt("max |lambda - weak-damping form| %.3e <= Gamma^2/2Delta = %.3e", worst, bound)};
}

Outcome thermalization() {
    double worst = 0.0;
    for (double t : {0.2, 1.0, 5.0}) {
        const BathSpec bath{0.01, 500.0, t};
        EvolveOptions opt;
        opt.t_max = 20.0 / rate_static(bath);
        opt.dt_out = opt.t_max / 10;
        opt.tol = 1e-10;
        const auto traj = evolve(bath, Drive::none(), {Vec3(0, 0, 1), 0.0}, opt);
        const double sz = traj.samples.back().s.z();
        worst = std::max(worst, std::abs(sz + std::tanh(kDelta / (2 * t))));
    }
    return {worst <= 1e-6, fmt("max |s_z + tanh(Delta/2T)| %.3e (tol 1e-6), T in {0.2, 1, 5}", worst)};
}

Outcome entropy_average() {
    const BathSpec bath{0.01, 500.0, 1.0};
    const Drive drives[] = {Drive::none(), Drive::cdt(1.2, 100.0), Drive::dd(2.4, 1000.0)};
    bool pass = true;
    std::string detail;
    for (const auto& d : drives) {
        const auto est = average_entropy_production(bath, d, 0.0, 100000, 7);
        const double expected = trace_bound(effective_rate(bath, d)).gamma_avg;
        const double z = std::abs(est.mean - expected) / est.standard_error;
        pass = pass && z <= 3.0;
        detail += std::string(to_string(d.kind)) + fmt(" %.2f SE; ", z);
    }
    return {pass, detail + "limit 3 SE, 1e5 samples"};
}

Outcome cdt_low_t() {
    const BathSpec cold{0.01, 500.0, kDelta / 100};
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
        const double g_static = trace_bound(rate_static(cold)).gamma;
        const double g_cdt = trace_bound(rate_cdt(Drive::cdt(x, 100.0), cold)).gamma;
        worst = std::max(worst, std::abs(g_cdt / g_static - bessel_j(0, x)));
    }
    return {worst <= 1e-3, fmt("max |gamma_CDT/gamma - J0(x)| %.3e (tol 1e-3)", worst)};
}

Outcome cdt_high_t() {
    const BathSpec hot{0.01, 500.0, 1000.0 * kDelta};
    const double g_cdt = trace_bound(rate_cdt(Drive::cdt(2.0, 100.0), hot)).gamma;
    const double classical = 4 * pi * hot.alpha * hot.temperature;
    const double rel = std::abs(g_cdt - classical) / classical;
    return {rel <= 1e-2, fmt("rel deviation from 4 pi alpha T %.3e (tol 1e-2)", rel)};
}

Outcome cdt_freeze() {
    const BathSpec closed{0.0, 500.0, 1.0};
    const Drive d = Drive::cdt(2.404825, 100.0);
    EvolveOptions opt;
    opt.t_max = 50 * d.period();
    opt.dt_out = d.period() / 64;
    opt.tol = 1e-10;
    const auto traj = evolve(closed, d, {Vec3(1, 0, 0), 0.0}, opt);
    double min_sx = 1.0;
    for (const auto& s : traj.samples) min_sx = std::min(min_sx, s.s.x());
    return {min_sx >= 0.999, fmt("min s_x %.6f over 50 periods (limit 0.999)", min_sx)};
}

Outcome q_oracle() {
    double worst_rel = 0.0;
    double worst_off = 0.0;
    for (double t : {0.0, 10.0}) {
        const BathSpec bath{0.01, 500.0, t};
        for (double x : {0.0, 1.2, 2.4}) {
            const Drive cdt = Drive::cdt(x, 1000.0);
            const Drive dd = Drive::dd(x, 1000.0);
            const std::pair<QubitOperator, QubitOperator> pairs[] = {
                {numeric_q_oracle(cdt, bath, 256, 64), effective_coupling_cdt(cdt, bath)},
                {numeric_q_oracle(dd, bath, 256, 64), effective_coupling_dd(dd, bath, 64)}};
            for (const auto& [numeric, closed] : pairs) {
                const double ref = closed.cx().real();
                worst_rel = std::max(worst_rel, std::abs(numeric.cx().real() - ref) / ref);
                worst_off = std::max({worst_off, std::abs(numeric.c0()), std::abs(numeric.cy()),
                                      std::abs(numeric.cz()), std::abs(numeric.cx().imag())});
            }
        }
    }
    return {worst_rel <= 1e-6 && worst_off < 1e-8,
            fmt("max rel err in sx %.3e (tol 1e-6), max off-sx %.3e (tol 1e-8)", worst_rel,
                worst_off)};
}

Outcome dd_thresholds() {
    const auto fig = scan::fig1_defaults();
    bool pass = true;
    std::string detail;
    for (double t : fig.temperatures) {
        const BathSpec bath = fig.bath(t);
        const Eta off = stabilization_eta(bath, Drive::dd(0.0, 1000.0));
        const Eta low = stabilization_eta(bath, Drive::dd(fig.amp_ratio, 10.0));
        const Eta high = stabilization_eta(bath, Drive::dd(fig.amp_ratio, 1e4));
        pass = pass && off.value == 0.25 && low.value < 0.25 && high.value > 1.0;
        detail += fmt("T=%g: eta(A=0)=%g eta(10)=%.4f ", t, off.value, low.value) +
                  fmt("eta(1e4)=%.4g; ", high.value);
    }
    const double hot = stabilization_eta(fig.bath(10.0), Drive::dd(fig.amp_ratio, 1e4)).value;
    const double cold = stabilization_eta(fig.bath(0.1), Drive::dd(fig.amp_ratio, 1e4)).value;
    pass = pass && hot > cold;
    return {pass, detail + "eta(T=10) > eta(T=0.1) at 1e4: " + (hot > cold ? "yes" : "no")};
}

Outcome jacobi_anger() {
    const double x = 2.4;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double theta = 2 * pi * i / 100.0;
        std::complex<double> sum = bessel_j(0, x);
        for (int k = 1; k <= 40; ++k) {
            const double jk = bessel_j(k, x);
            const double sign = k % 2 == 0 ? 1.0 : -1.0;  // J_{-k} = (-1)^k J_k
            sum += jk * std::polar(1.0, k * theta) + sign * jk * std::polar(1.0, -k * theta);
        }
        worst = std::max(worst, std::abs(sum - std::polar(1.0, x * std::sin(theta))));
    }
    return {worst <= 1e-10, fmt("max |partial sum - exp(i x sin theta)| %.3e (tol 1e-10)", worst)};
}

Outcome determinism() {
    auto run_fig1 = [] {
        const char* argv[] = {"qcstab", "fig1", "--workers", "4"};
        std::ostringstream out, err;
        const int code = scan::run_cli(4, argv, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = run_fig1();
    const auto b = run_fig1();
    const bool pass = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
    return {pass, fmt("two fig1 runs, %g bytes each, identical: ", static_cast<double>(a.second.size())) +
                      (a.second == b.second ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"undriven rates", undriven_rates},
        {"eigenvalues", eigenvalues},
        {"thermalization", thermalization},
        {"entropy-production average", entropy_average},
        {"CDT low-T limit", cdt_low_t},
        {"CDT high-T limit", cdt_high_t},
        {"CDT freeze", cdt_freeze},
        {"Q oracle equivalence", q_oracle},
        {"DD threshold identities", dd_thresholds},
        {"Jacobi-Anger", jacobi_anger},
        {"determinism", determinism},
    };

    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("%s %2zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    outcome.detail.c_str());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures,
                criteria.size(), seconds);
    return failures == 0 ? 0 : 1;
}
