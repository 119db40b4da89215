// config.cpp: key = value configuration parsing

#include "qcstab/scan/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace qcstab::scan {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string normalise_key(std::string key) {
    key = trim(key);
    std::replace(key.begin(), key.end(), '_', '-');
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return key;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw UsageError(key, "expected a number, got '" + text + "'");
    }
    return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError(key, "expected an integer, got '" + text + "'");
    }
    return value;
}

std::string shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += shortest(values[i]);
    }
    return out;
}

const std::vector<std::string>& sweep_parameters() {
    static const std::vector<std::string> names{"omega", "temperature", "amp-ratio", "alpha",
                                                "omega-c"};
    return names;
}

}  // namespace

void SweepSpec::validate() const {
    const auto& names = sweep_parameters();
    if (std::find(names.begin(), names.end(), parameter) == names.end()) {
        throw UsageError("sweep", "unknown sweep parameter '" + parameter + "'");
    }
    if (points < 2) throw UsageError("points", "a sweep needs at least 2 points");
    if (!(max > min)) throw UsageError("max", "must exceed min");
    if (spacing == Spacing::Log && !(min > 0.0)) {
        throw UsageError("min", "log spacing requires min > 0");
    }
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        out[i] = spacing == Spacing::Log ? min * std::pow(max / min, f) : min + (max - min) * f;
    }
    // endpoints exact
    out.front() = min;
    out.back() = max;
    return out;
}

Drive RunConfig::drive() const {
    if (drive_kind == DriveKind::None) return Drive::none();
    return Drive::from_ratio(drive_kind, amp_ratio, omega);
}

void RunConfig::set(const std::string& raw_key, const std::string& value) {
    const std::string key = normalise_key(raw_key);
    auto sweep_spec = [this]() -> SweepSpec& {
        if (!sweep) sweep.emplace();
        return *sweep;
    };

    if (key == "alpha") {
        alpha = parse_double(key, value);
    } else if (key == "omega-c") {
        omega_c = parse_double(key, value);
    } else if (key == "temperature") {
        std::vector<double> list;
        for (const auto& item : split_list(value)) list.push_back(parse_double(key, item));
        if (list.empty()) throw UsageError(key, "empty temperature list");
        temperatures = std::move(list);
    } else if (key == "drive") {
        try {
            drive_kind = parse_drive_kind(trim(value));
        } catch (const std::invalid_argument& e) {
            throw UsageError(key, e.what());
        }
    } else if (key == "amp-ratio") {
        amp_ratio = parse_double(key, value);
    } else if (key == "omega") {
        omega = parse_double(key, value);
    } else if (key == "n-max") {
        n_max = static_cast<int>(parse_integer(key, value));
    } else if (key == "tol") {
        tol = parse_double(key, value);
    } else if (key == "seed") {
        const long long s = parse_integer(key, value);
        if (s < 0) throw UsageError(key, "must be >= 0");
        seed = static_cast<std::uint64_t>(s);
    } else if (key == "out") {
        out = trim(value);
    } else if (key == "workers") {
        workers = static_cast<int>(parse_integer(key, value));
    } else if (key == "s0") {
        const auto parts = split_list(value);
        if (parts.size() != 3) throw UsageError(key, "expected three components x,y,z");
        s0 = Vec3(parse_double(key, parts[0]), parse_double(key, parts[1]),
                  parse_double(key, parts[2]));
    } else if (key == "t-max") {
        t_max = parse_double(key, value);
    } else if (key == "dt-out") {
        dt_out = parse_double(key, value);
    } else if (key == "sweep") {
        sweep_spec().parameter = normalise_key(value);
    } else if (key == "min") {
        sweep_spec().min = parse_double(key, value);
    } else if (key == "max") {
        sweep_spec().max = parse_double(key, value);
    } else if (key == "points") {
        sweep_spec().points = static_cast<int>(parse_integer(key, value));
    } else if (key == "spacing") {
        const std::string v = normalise_key(value);
        if (v == "log") {
            sweep_spec().spacing = Spacing::Log;
        } else if (v == "linear" || v == "lin") {
            sweep_spec().spacing = Spacing::Linear;
        } else {
            throw UsageError(key, "expected linear or log, got '" + value + "'");
        }
    } else {
        throw UsageError(key.empty() ? raw_key : key, "unknown setting");
    }
}

void RunConfig::validate() const {
    if (!(alpha >= 0.0)) throw UsageError("alpha", "must be >= 0");
    if (!(omega_c > 0.0)) throw UsageError("omega-c", "must be > 0");
    for (double t : temperatures) {
        if (!(t >= 0.0)) throw UsageError("temperature", "must be >= 0");
    }
    if (drive_kind != DriveKind::None) {
        if (!(omega > 0.0)) throw UsageError("omega", "must be > 0");
        if (!(amp_ratio >= 0.0)) throw UsageError("amp-ratio", "must be >= 0");
    }
    if (n_max < 1) throw UsageError("n-max", "must be >= 1");
    if (!(tol >= 1e-12 && tol <= 1e-4)) throw UsageError("tol", "must lie in [1e-12, 1e-4]");
    if (workers < 1) throw UsageError("workers", "must be >= 1");
    if (!(s0.norm() <= 1.0 + 1e-12)) throw UsageError("s0", "|s0| must not exceed 1");
    if (!(t_max > 0.0)) throw UsageError("t-max", "must be > 0");
    if (!(dt_out > 0.0)) throw UsageError("dt-out", "must be > 0");
    if (sweep) sweep->validate();
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const {
    std::vector<std::pair<std::string, std::string>> out{
        {"alpha", shortest(alpha)},
        {"omega-c", shortest(omega_c)},
        {"temperature", join(temperatures)},
        {"drive", std::string(to_string(drive_kind))},
        {"amp-ratio", shortest(amp_ratio)},
        {"omega", shortest(omega)},
        {"n-max", std::to_string(n_max)},
        {"tol", shortest(tol)},
        {"seed", std::to_string(seed)},
        {"s0", join({s0.x(), s0.y(), s0.z()})},
        {"t-max", shortest(t_max)},
        {"dt-out", shortest(dt_out)},
    };
    if (sweep) {
        out.emplace_back("sweep", sweep->parameter);
        out.emplace_back("min", shortest(sweep->min));
        out.emplace_back("max", shortest(sweep->max));
        out.emplace_back("points", std::to_string(sweep->points));
        out.emplace_back("spacing", sweep->spacing == Spacing::Log ? "log" : "linear");
    }
    return out;
}

RunConfig fig1_defaults() {
    RunConfig config;
    config.alpha = 0.01;
    config.omega_c = 500.0;
    config.amp_ratio = 2.4;
    config.drive_kind = DriveKind::DD;
    config.temperatures = {0.1, 1.0, 10.0};
    config.sweep = SweepSpec{"omega", 10.0, 1e4, 200, Spacing::Log};
    return config;
}

void apply_config_text(std::istream& in, RunConfig& config) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config", "line " + std::to_string(line_no) + ": expected key = value");
        }
        config.set(line.substr(0, eq), line.substr(eq + 1));
    }
}

void apply_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw UsageError("config", "cannot read '" + path + "'");
    apply_config_text(in, config);
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8e", value);
    return buf;
}

}  // namespace qcstab::scan
