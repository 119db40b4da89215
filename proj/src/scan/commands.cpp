// commands.cpp: subcommand implementations and CSV emission

#include "qcstab/scan/commands.hpp"

#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "qcstab/dynamics.hpp"

namespace qcstab::scan {

namespace {

constexpr const char* kReferenceLines =
    "# reference lines: eta = 0.25 (coherence improved on average over initial states), "
    "eta = 1 (improved for every initial state)";

constexpr int kEntropySamples = 100000;

std::string label(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

RunConfig with_swept_value(RunConfig config, const std::string& parameter, double value,
                           double& temperature) {
    if (parameter == "omega") {
        config.omega = value;
    } else if (parameter == "temperature") {
        temperature = value;
    } else if (parameter == "amp-ratio") {
        config.amp_ratio = value;
    } else if (parameter == "alpha") {
        config.alpha = value;
    } else if (parameter == "omega-c") {
        config.omega_c = value;
    }
    return config;
}

// Evaluates fn(i) for i in [0, n) on up to `workers` threads; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int workers, Fn fn) {
    std::vector<T> results(n);
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t w = 0; w < n_threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

void write_provenance(const RunConfig& config, const std::string& title, std::ostream& out,
                      const std::vector<std::pair<std::string, std::string>>& overrides = {}) {
    static const std::set<std::string> evolve_only{"s0", "t-max", "dt-out", "tol", "seed"};
    const bool evolving = title.rfind("evolve", 0) == 0;
    out << "# qcstab " << title << '\n';
    for (auto [key, value] : config.describe()) {
        if (!evolving && evolve_only.count(key)) continue;
        if (config.sweep && key == config.sweep->parameter) continue;
        for (const auto& [okey, ovalue] : overrides) {
            if (okey == key) value = ovalue;
        }
        out << "# " << key << " = " << value << '\n';
    }
}

std::vector<std::string> collect_warnings(const BathSpec& bath, const Drive& drive) {
    auto warnings = bath.validity_warnings();
    for (auto& w : drive.validity_warnings()) warnings.push_back(std::move(w));
    return warnings;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    return file;
}

void finish_output(std::ofstream& file, const std::string& path) {
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

void write_rate_header(const std::string& first, DriveKind kind, std::ostream& out) {
    out << first << ",delta_eff,gamma_eff,gamma_trace,gamma_avg";
    if (kind != DriveKind::None) {
        out << ',' << (kind == DriveKind::CDT ? "eta_cdt" : "eta") << ",eta_capped";
    }
    out << '\n';
}

void write_rate_row(double first, const RateReport& r, std::ostream& out) {
    out << format_number(first) << ',' << format_number(r.delta_eff) << ','
        << format_number(r.gamma_relax) << ',' << format_number(r.gamma_trace) << ','
        << format_number(r.gamma_avg);
    if (r.eta) out << ',' << format_number(r.eta->value) << ',' << (r.eta->capped ? 1 : 0);
    out << '\n';
}

const SweepSpec& require_sweep(const RunConfig& config) {
    if (!config.sweep) throw UsageError("sweep", "a sweep parameter is required");
    return *config.sweep;
}

}  // namespace

std::vector<ScanRow> scan_rows(const RunConfig& config, double temperature) {
    const auto& sweep = require_sweep(config);
    const auto values = sweep.values();
    return parallel_map<ScanRow>(values.size(), config.workers, [&](std::size_t i) {
        double t = temperature;
        const auto point = with_swept_value(config, sweep.parameter, values[i], t);
        point.validate();
        const auto bath = point.bath(t);
        const auto drive = point.drive();
        bath.validate();
        drive.validate();
        return ScanRow{values[i], rate_report(bath, drive, point.n_max)};
    });
}

void write_rates_report(const RunConfig& config, std::ostream& out) {
    const auto bath = config.bath(config.temperatures.front());
    const auto drive = config.drive();
    bath.validate();
    drive.validate();
    const auto report = rate_report(bath, drive, config.n_max);

    auto line = [&out](const std::string& name, double value, const char* unit) {
        out << std::left << std::setw(18) << name << format_number(value) << unit << '\n';
    };
    out << std::left << std::setw(18) << "drive" << to_string(drive.kind);
    if (drive.kind != DriveKind::None) {
        out << " (2A/Omega = " << label(drive.amp_ratio()) << ", Omega = " << label(drive.omega)
            << " Delta)";
    }
    out << '\n';
    line("temperature", bath.temperature, " hbar Delta/k_B");
    line("Delta_eff", report.delta_eff, " Delta");
    line("Gamma_eff", report.gamma_relax, " Delta");
    line("gamma = tr M", report.gamma_trace, " Delta");
    line("Gamma_av", report.gamma_avg, " Delta");
    const auto sampled = average_entropy_production(bath, drive, 0.0, kEntropySamples, config.seed,
                                                    config.n_max);
    out << std::left << std::setw(18) << "<dS/dt> sampled" << format_number(sampled.mean)
        << " +- " << format_number(sampled.standard_error) << " Delta (" << kEntropySamples
        << " pure states, seed " << config.seed << ")\n";
    if (report.eta) {
        line(std::string(report.eta_name()), report.eta->value, "");
        if (report.eta->capped) out << "warning: driven rate vanishes; eta capped\n";
    }
    for (const auto& w : collect_warnings(bath, drive)) out << "warning: " << w << '\n';
}

void write_scan_csv(const RunConfig& config, double temperature, std::ostream& out) {
    const auto& sweep = require_sweep(config);
    const auto rows = scan_rows(config, temperature);

    std::set<std::string> warnings;
    for (const auto& row : rows) {
        double t = temperature;
        const auto point = with_swept_value(config, sweep.parameter, row.swept, t);
        for (auto& w : collect_warnings(point.bath(t), point.drive())) warnings.insert(w);
    }

    std::vector<std::pair<std::string, std::string>> overrides;
    if (sweep.parameter != "temperature") overrides.emplace_back("temperature", label(temperature));
    write_provenance(config, "scan: rates versus " + sweep.parameter, out, overrides);
    if (config.drive_kind != DriveKind::None) out << kReferenceLines << '\n';
    for (const auto& w : warnings) out << "# warning: " << w << '\n';

    write_rate_header(sweep.parameter, config.drive_kind, out);
    for (const auto& row : rows) write_rate_row(row.swept, row.report, out);
}

int write_evolve_csv(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.temperatures.size() != 1) {
        throw UsageError("temperature", "evolve takes exactly one temperature");
    }
    const auto bath = config.bath(config.temperatures.front());
    const auto drive = config.drive();
    const EvolveOptions options{config.t_max, config.dt_out, config.tol, config.n_max};

    write_provenance(config, "evolve: Bloch vector trajectory", out);
    for (const auto& w : collect_warnings(bath, drive)) out << "# warning: " << w << '\n';
    out << "t,s_x,s_y,s_z,S,Sdot\n";

    auto write_rows = [&out](const Trajectory& traj) {
        for (const auto& p : traj.samples) {
            out << format_number(p.t) << ',' << format_number(p.s.x()) << ','
                << format_number(p.s.y()) << ',' << format_number(p.s.z()) << ','
                << format_number(p.entropy) << ',' << format_number(p.entropy_production) << '\n';
        }
    };

    try {
        const auto traj = evolve(bath, drive, BlochState{config.s0, 0.0}, options);
        write_rows(traj);
        if (traj.purity_violation) {
            out << "# warning: |s| exceeded 1 + 100 tol (max |s| = " << format_number(traj.max_norm)
                << "); the weak-coupling master equation is not completely positive\n";
            err << "warning: Bloch vector left the unit ball (max |s| = "
                << format_number(traj.max_norm) << ")\n";
        }
    } catch (const IntegrationDiverged& e) {
        write_rows(e.partial());
        out << "# PARTIAL: " << e.what() << '\n';
        err << "error: " << e.what() << '\n';
        return kExitDiverged;
    }
    return kExitOk;
}

void write_fig1_csv(const RunConfig& config, std::ostream& out) {
    const auto& sweep = require_sweep(config);
    if (sweep.parameter != "omega") throw UsageError("sweep", "fig1 sweeps omega");
    if (config.drive_kind != DriveKind::DD) throw UsageError("drive", "fig1 uses dd driving");

    std::vector<std::vector<ScanRow>> columns;
    columns.reserve(config.temperatures.size());
    for (double t : config.temperatures) columns.push_back(scan_rows(config, t));

    write_provenance(config, "fig1: coherence stabilization eta versus driving frequency", out);
    out << kReferenceLines << '\n';
    out << "omega";
    for (double t : config.temperatures) out << ",eta_T" << label(t);
    out << '\n';
    const auto n_rows = columns.front().size();
    for (std::size_t i = 0; i < n_rows; ++i) {
        out << format_number(columns.front()[i].swept);
        for (const auto& col : columns) out << ',' << format_number(col[i].report.eta->value);
        out << '\n';
    }
}

std::string per_temperature_path(const std::string& base, double temperature) {
    const std::filesystem::path p(base);
    auto name = p.stem().string() + "_T" + label(temperature) + p.extension().string();
    return (p.parent_path() / name).string();
}

int cmd_rates(const RunConfig& config, std::ostream& out, std::ostream&) {
    config.validate();
    write_rates_report(config, out);
    if (!config.out.empty()) {
        const double temperature = config.temperatures.front();
        const auto bath = config.bath(temperature);
        auto file = open_output(config.out);
        write_provenance(config, "rates: single parameter point", file);
        write_rate_header("temperature", config.drive_kind, file);
        write_rate_row(temperature, rate_report(bath, config.drive(), config.n_max), file);
        finish_output(file, config.out);
    }
    return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
    config.validate();
    const auto& sweep = require_sweep(config);
    std::vector<double> temperatures = config.temperatures;
    if (sweep.parameter == "temperature") temperatures = {0.0};

    if (temperatures.size() == 1) {
        if (config.out.empty()) {
            write_scan_csv(config, temperatures.front(), out);
        } else {
            auto file = open_output(config.out);
            write_scan_csv(config, temperatures.front(), file);
            finish_output(file, config.out);
        }
        return kExitOk;
    }
    if (config.out.empty()) {
        throw UsageError("out", "scanning several temperatures writes one file each; set --out");
    }
    for (double t : temperatures) {
        const auto path = per_temperature_path(config.out, t);
        auto file = open_output(path);
        write_scan_csv(config, t, file);
        finish_output(file, path);
        err << "wrote " << path << '\n';
    }
    return kExitOk;
}

int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    config.validate();
    if (config.out.empty()) return write_evolve_csv(config, out, err);
    auto file = open_output(config.out);
    const int code = write_evolve_csv(config, file, err);
    finish_output(file, config.out);
    return code;
}

int cmd_fig1(const RunConfig& config, std::ostream& out, std::ostream&) {
    config.validate();
    if (config.out.empty()) {
        write_fig1_csv(config, out);
        return kExitOk;
    }
    auto file = open_output(config.out);
    write_fig1_csv(config, file);
    finish_output(file, config.out);
    return kExitOk;
}

}  // namespace qcstab::scan
