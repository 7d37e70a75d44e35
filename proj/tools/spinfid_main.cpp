// Command-line front end: single-point fidelity, rapidity sweeps and the
// oracle verification matrix. Exit codes: 0 success, 1 usage error,
// 2 numerical failure, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinfid/spinfid.hpp"

namespace {

struct CliValues {
    std::string config_path;
    std::string state;
    std::string corr;
    std::string support;
    std::string output;
    double gamma = 0.0;
    double theta = 0.0;
    double eta = 0.0;
    double beta = 0.0;
    double eta_min = 0.0;
    double eta_max = 0.0;
    int steps = 0;
    int oracle_nodes = 0;
    int figure = 0;
    bool with_oracle = false;
    bool dump_config = false;
};

void add_common_flags(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--config", v.config_path, "flat key = value config file; flags override it");
    cmd->add_option("--state", v.state, "spin state: ghz, w or all");
    cmd->add_option("--corr", v.corr, "momentum correlation: product, pair, triple or all");
    cmd->add_option("--gamma", v.gamma, "width gamma = alpha/mc of the momentum Gaussian");
    cmd->add_option("--theta", v.theta, "boost polar angle in radians, direction (sin t, 0, cos t)");
    cmd->add_option("--support", v.support, "oracle momentum support: positive or symmetric");
    cmd->add_option("--oracle-nodes", v.oracle_nodes, "momentum grid size for the oracle");
    cmd->add_option("--output", v.output, "output format: csv or json");
    cmd->add_flag("--dump-config", v.dump_config, "print the effective config and exit");
}

bool provided(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

spinfid::ScenarioConfig build_config(const CLI::App* cmd, const CliValues& v) {
    spinfid::ScenarioConfig config;
    if (!v.config_path.empty()) {
        std::ifstream in(v.config_path);
        if (!in) {
            throw std::invalid_argument("cannot open config file '" + v.config_path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = spinfid::parse_config_text(text.str());
    }
    if (provided(cmd, "--figure")) {
        config.state = v.figure == 1 ? spinfid::SpinStateKind::GHZ : spinfid::SpinStateKind::W;
        config.corr = std::nullopt;
        config.gamma.gamma = 20.0;
        config.theta = 0.0;
        config.eta = std::nullopt;
        config.beta = std::nullopt;
        config.eta_range = spinfid::EtaRange{0.0, 10.0, 201};
    }
    if (provided(cmd, "--state")) config.state = spinfid::parse_state(v.state);
    if (provided(cmd, "--corr")) config.corr = spinfid::parse_corr(v.corr);
    if (provided(cmd, "--gamma")) config.gamma.gamma = v.gamma;
    if (provided(cmd, "--theta")) config.theta = v.theta;
    if (provided(cmd, "--support")) config.support = spinfid::parse_support(v.support);
    if (provided(cmd, "--eta")) config.eta = v.eta;
    if (provided(cmd, "--beta")) config.beta = v.beta;
    if (provided(cmd, "--eta-min") || provided(cmd, "--eta-max") || provided(cmd, "--steps")) {
        spinfid::EtaRange range = config.eta_range.value_or(spinfid::EtaRange{});
        if (provided(cmd, "--eta-min")) range.min = v.eta_min;
        if (provided(cmd, "--eta-max")) range.max = v.eta_max;
        if (provided(cmd, "--steps")) range.steps = v.steps;
        config.eta_range = range;
        config.eta = std::nullopt;
        config.beta = std::nullopt;
    }
    if (provided(cmd, "--oracle-nodes")) config.oracle_nodes = v.oracle_nodes;
    if (provided(cmd, "--with-oracle")) config.with_oracle = v.with_oracle;
    if (provided(cmd, "--output")) config.output = spinfid::parse_output(v.output);
    return config;
}

int run_fidelity_cmd(const CLI::App* cmd, const CliValues& v) {
    const spinfid::ScenarioConfig config = build_config(cmd, v);
    if (v.dump_config) {
        std::cout << spinfid::dump_config(config);
        return 0;
    }
    const spinfid::FidelityRecord record = spinfid::run_fidelity(config);
    if (config.output == spinfid::OutputFormat::Csv) {
        std::cout << spinfid::to_csv(record);
    } else {
        std::cout << spinfid::to_json(record).dump(2) << '\n';
    }
    return 0;
}

int run_sweep_cmd(const CLI::App* cmd, const CliValues& v) {
    spinfid::ScenarioConfig config = build_config(cmd, v);
    if (!config.eta_range && !config.eta && !config.beta) {
        config.eta_range = spinfid::EtaRange{};
    }
    if (v.dump_config) {
        std::cout << spinfid::dump_config(config);
        return 0;
    }
    const spinfid::SweepResult sweep = spinfid::run_sweep(config);
    if (config.output == spinfid::OutputFormat::Csv) {
        std::cout << spinfid::to_csv(sweep);
    } else {
        std::cout << spinfid::to_json(sweep).dump(2) << '\n';
    }
    return 0;
}

int run_verify_cmd(const CLI::App* cmd, const CliValues& v) {
    const spinfid::ScenarioConfig config = build_config(cmd, v);
    if (v.dump_config) {
        std::cout << spinfid::dump_config(config);
        return 0;
    }
    const spinfid::VerificationReport report =
        spinfid::run_verification(config.oracle_nodes, config.tolerances);
    std::cout << spinfid::format_report(report);
    return report.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin fidelity of boosted three-qubit GHZ and W states"};
    app.require_subcommand(1);

    CliValues fid_values, sweep_values, verify_values;

    CLI::App* fid = app.add_subcommand("fidelity", "closed-form fidelity at a single boost");
    add_common_flags(fid, fid_values);
    fid->add_option("--eta", fid_values.eta, "boost rapidity, tanh eta = V/c");
    fid->add_option("--beta", fid_values.beta, "boost speed fraction V/c (alternative to --eta)");
    fid->add_flag("--with-oracle", fid_values.with_oracle,
                  "also evaluate the brute-force oracle and the signed difference");

    CLI::App* sweep = app.add_subcommand("sweep", "fidelity versus rapidity, CSV or JSON");
    add_common_flags(sweep, sweep_values);
    sweep->add_option("--eta-min", sweep_values.eta_min, "sweep start");
    sweep->add_option("--eta-max", sweep_values.eta_max, "sweep end");
    sweep->add_option("--steps", sweep_values.steps, "number of sweep points");
    sweep->add_option("--figure", sweep_values.figure, "preset 1 (GHZ) or 2 (W): gamma=20, theta=0, eta in [0,10], 201 steps")
        ->check(CLI::Range(1, 2));

    CLI::App* verify = app.add_subcommand("verify", "run the oracle-vs-closed-form matrix");
    add_common_flags(verify, verify_values);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (fid->parsed()) return run_fidelity_cmd(fid, fid_values);
        if (sweep->parsed()) return run_sweep_cmd(sweep, sweep_values);
        return run_verify_cmd(verify, verify_values);
    } catch (const spinfid::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << " (best estimate "
                  << e.best().value << " +- " << e.best().error_bound << ")\n";
        return 2;
    } catch (const spinfid::InvalidStateError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }
}
