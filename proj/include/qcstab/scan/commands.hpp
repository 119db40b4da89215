// commands.hpp: rates, scan, evolve and fig1 subcommands

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcstab/rates.hpp"
#include "qcstab/scan/config.hpp"

namespace qcstab::scan {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitDiverged = 3,
    kExitIo = 4,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScanRow {
    double swept = 0.0;
    RateReport report;
};

/// Evaluates the rate report at every sweep point for one temperature, using
/// up to config.workers threads. Rows come back in sweep order.
std::vector<ScanRow> scan_rows(const RunConfig& config, double temperature);

/// Human-readable report for a single parameter point, followed by
/// validity warnings. Uses the first temperature.
void write_rates_report(const RunConfig& config, std::ostream& out);

/// CSV with '#' provenance comments, a header row and one row per sweep point.
void write_scan_csv(const RunConfig& config, double temperature, std::ostream& out);

/// CSV columns t, s_x, s_y, s_z, S, Sdot. Returns kExitDiverged if the
/// integration diverged; the rows up to that point are still written and
/// a trailing '# PARTIAL' comment flags the file.
int write_evolve_csv(const RunConfig& config, std::ostream& out, std::ostream& err);

/// eta(Omega) with one column per temperature.
void write_fig1_csv(const RunConfig& config, std::ostream& out);

/// Output file for one temperature of a multi-temperature scan:
/// "scan.csv" -> "scan_T0.1.csv".
std::string per_temperature_path(const std::string& base, double temperature);

/// The subcommands proper: resolve the output destination(s) and return an
/// exit code. Throw UsageError / IoError.
int cmd_rates(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fig1(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qcstab::scan
