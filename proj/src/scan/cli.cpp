// cli.cpp: CLI11 front end

#include "qcstab/scan/cli.hpp"

#include <deque>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcstab/dynamics.hpp"
#include "qcstab/scan/commands.hpp"
#include "qcstab/scan/config.hpp"

namespace qcstab::scan {

namespace {

struct FlagSpec {
    const char* name;
    const char* help;
    int values = 1;  // -1: repeatable
};

const std::vector<FlagSpec> kCommonFlags{
    {"alpha", "dimensionless dissipation strength"},
    {"omega-c", "bath cutoff frequency (units of Delta)"},
    {"temperature", "temperature in hbar Delta/k_B; repeatable or comma separated", -1},
    {"drive", "none | cdt | dd"},
    {"amp-ratio", "drive strength 2A/(hbar Omega)"},
    {"omega", "driving frequency (units of Delta)"},
    {"n-max", "harmonics kept in the decoupling series"},
    {"tol", "integrator tolerance"},
    {"seed", "random seed"},
    {"out", "output file (default: standard output)"},
    {"workers", "worker threads for sweeps"},
};

const std::vector<FlagSpec> kSweepFlags{
    {"sweep", "swept parameter: omega | temperature | amp-ratio | alpha | omega-c"},
    {"min", "first sweep value"},
    {"max", "last sweep value"},
    {"points", "number of sweep points (>= 2)"},
    {"spacing", "linear | log"},
};

const std::vector<FlagSpec> kEvolveFlags{
    {"s0", "initial Bloch vector x y z", 3},
    {"t-max", "integration time (units of 1/Delta)"},
    {"dt-out", "output sampling interval"},
};

// Raw flag values per subcommand, in declaration order.
struct Subcommand {
    CLI::App* app = nullptr;
    std::string config_path;
    std::deque<std::pair<std::string, std::vector<std::string>>> flags;
};

void add_flags(Subcommand& sub, const std::vector<FlagSpec>& specs) {
    for (const auto& spec : specs) {
        auto& slot = sub.flags.emplace_back(spec.name, std::vector<std::string>{});
        auto* opt = sub.app->add_option(std::string("--") + spec.name, slot.second, spec.help);
        if (spec.values == -1) {
            opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
        } else {
            opt->expected(spec.values);
            if (spec.values == 1) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        }
    }
}

std::string joined(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i];
    }
    return out;
}

RunConfig resolve(const std::string& name, const Subcommand& sub) {
    RunConfig config = name == "fig1" ? fig1_defaults() : RunConfig{};
    if (!sub.config_path.empty()) apply_config_file(sub.config_path, config);
    for (const auto& [key, values] : sub.flags) {
        if (!values.empty()) config.set(key, joined(values));
    }
    return config;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coherence of a driven qubit under Ohmic bit-flip noise"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> names{
        {"rates", "decoherence rates and eta at a single parameter point"},
        {"scan", "rates over a parameter sweep as CSV (one file per temperature)"},
        {"evolve", "integrate the Bloch equation and write the trajectory as CSV"},
        {"fig1", "eta versus driving frequency for several temperatures"},
    };
    std::map<std::string, Subcommand> subs;
    for (const auto& [name, help] : names) {
        auto& sub = subs[name];
        sub.app = app.add_subcommand(name, help);
        sub.app->add_option("--config", sub.config_path, "key = value settings file");
        add_flags(sub, kCommonFlags);
        if (name == "scan" || name == "fig1") add_flags(sub, kSweepFlags);
        if (name == "evolve") add_flags(sub, kEvolveFlags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [name, sub] : subs) {
        if (!sub.app->parsed()) continue;
        try {
            const RunConfig config = resolve(name, sub);
            if (name == "rates") return cmd_rates(config, out, err);
            if (name == "scan") return cmd_scan(config, out, err);
            if (name == "evolve") return cmd_evolve(config, out, err);
            return cmd_fig1(config, out, err);
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const IoError& e) {
            err << "I/O error: " << e.what() << '\n';
            return kExitIo;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return kExitUsage;
}

}  // namespace qcstab::scan
