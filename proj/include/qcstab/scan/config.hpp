// config.hpp: run configuration for the command-line front end

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcstab/bath.hpp"
#include "qcstab/driving.hpp"
#include "qcstab/qubit_algebra.hpp"
#include "qcstab/rates.hpp"

namespace qcstab::scan {

/// Invalid configuration value; field() names the offending key.
class UsageError : public std::invalid_argument {
public:
    UsageError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class Spacing { Linear, Log };

struct SweepSpec {
    std::string parameter = "omega";  // omega | temperature | amp-ratio | alpha | omega-c
    double min = 10.0;
    double max = 1e4;
    int points = 200;
    Spacing spacing = Spacing::Log;

    void validate() const;
    /// points values from min to max inclusive.
    std::vector<double> values() const;
};

struct RunConfig {
    double alpha = 0.01;
    double omega_c = 500.0;
    std::vector<double> temperatures{1.0};
    DriveKind drive_kind = DriveKind::None;
    double amp_ratio = 2.4;  // x = 2A/Omega; A is derived
    double omega = 1000.0;

    std::optional<SweepSpec> sweep;

    std::string out;  // empty: standard output
    double tol = 1e-9;
    int n_max = kDefaultSeriesTerms;
    std::uint64_t seed = 1;
    int workers = 1;

    Vec3 s0 = Vec3::UnitZ();
    double t_max = 100.0;
    double dt_out = 0.1;

    BathSpec bath(double temperature) const { return {alpha, omega_c, temperature}; }
    Drive drive() const;

    /// Applies one key = value setting. Keys match the long flag names
    /// (underscores are accepted for dashes). "temperature" takes a comma
    /// separated list and "s0" three comma separated components.
    /// Throws UsageError.
    void set(const std::string& key, const std::string& value);

    /// Throws UsageError naming the first invalid field.
    void validate() const;

    /// Every resolved setting as (key, value) text, in a fixed order.
    std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Defaults of the fig1 bundle: alpha = 0.01, omega_c = 500, x = 2.4, DD,
/// T in {0.1, 1, 10}, Omega from 10 to 1e4 on 200 log-spaced points.
RunConfig fig1_defaults();

/// Reads "key = value" lines; '#' starts a comment, blank lines are skipped.
void apply_config_text(std::istream& in, RunConfig& config);
/// Throws UsageError("config", ...) if the file cannot be read.
void apply_config_file(const std::string& path, RunConfig& config);

/// Nine significant digits in scientific notation.
std::string format_number(double value);

}  // namespace qcstab::scan
