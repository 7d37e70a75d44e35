#pragma once

#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spinfid/fidelity.hpp"
#include "spinfid/moments.hpp"
#include "spinfid/oracle.hpp"
#include "spinfid/quadrature.hpp"

namespace spinfid {

enum class OutputFormat { Csv, Json };

struct EtaRange {
    double min = 0.0;
    double max = 10.0;
    int steps = 201;

    void validate() const {
        if (!(min >= 0.0) || !(max > min) || steps < 2) {
            throw std::invalid_argument(
                "eta range must satisfy min >= 0, max > min, steps >= 2");
        }
    }

    double at(int i) const { return min + i * (max - min) / (steps - 1); }
};

/// One evaluation scenario. Exactly one of eta / beta / eta range may be
/// given; when none is, single-point commands default to eta = 0 and sweeps
/// to the [0, 10] x 201 grid. A state or correlation mode left unset means
/// "all" for sweep-style commands.
struct ScenarioConfig {
    std::optional<SpinStateKind> state = SpinStateKind::GHZ;
    std::optional<CorrelationMode> corr = CorrelationMode::Product;
    WaveletWidth gamma{20.0};
    double theta = 0.0;
    MomentumSupport support = MomentumSupport::SymmetricLine;
    std::optional<double> eta;
    std::optional<double> beta;
    std::optional<EtaRange> eta_range;
    int oracle_nodes = 128;
    bool with_oracle = false;
    OutputFormat output = OutputFormat::Csv;
    QuadratureSettings tolerances;

    void validate() const {
        int sources = 0;
        if (eta) ++sources;
        if (beta) ++sources;
        if (eta_range) ++sources;
        if (sources > 1) {
            throw std::invalid_argument("give only one of eta, beta or an eta range");
        }
        if (eta && !(*eta >= 0.0)) {
            throw std::invalid_argument("eta must satisfy eta >= 0");
        }
        if (beta && !(std::abs(*beta) < 1.0)) {
            throw std::invalid_argument("beta must satisfy |beta| < 1");
        }
        if (eta_range) eta_range->validate();
        if (!(theta >= 0.0 && theta <= M_PI)) {
            throw std::invalid_argument("theta must lie in [0, pi]");
        }
        if (oracle_nodes < 8) {
            throw std::invalid_argument("oracle_nodes must be >= 8");
        }
        gamma.validate();
        tolerances.validate();
    }

    /// Boost rapidity for single-point evaluation.
    double resolve_eta() const {
        if (eta_range) {
            throw std::invalid_argument("this command takes a single eta or beta, not a range");
        }
        if (beta) return rapidity_from_beta(*beta);
        return eta.value_or(0.0);
    }

    EtaRange resolve_range() const {
        if (eta || beta) {
            throw std::invalid_argument("a sweep needs an eta range, not a single eta or beta");
        }
        return eta_range.value_or(EtaRange{});
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" + value + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw std::invalid_argument("config key '" + key + "': expected an integer, got '" + value + "'");
    }
    return i;
}

inline bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" + value + "'");
}

inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::optional<SpinStateKind> parse_state(const std::string& s) {
    if (s == "ghz") return SpinStateKind::GHZ;
    if (s == "w") return SpinStateKind::W;
    if (s == "all") return std::nullopt;
    throw std::invalid_argument("unknown spin state '" + s + "' (expected ghz, w or all)");
}

inline std::optional<CorrelationMode> parse_corr(const std::string& s) {
    if (s == "product") return CorrelationMode::Product;
    if (s == "pair") return CorrelationMode::PairCorrelated;
    if (s == "triple") return CorrelationMode::TripleCorrelated;
    if (s == "all") return std::nullopt;
    throw std::invalid_argument("unknown correlation mode '" + s +
                                "' (expected product, pair, triple or all)");
}

inline MomentumSupport parse_support(const std::string& s) {
    if (s == "positive") return MomentumSupport::PositiveAxis;
    if (s == "symmetric") return MomentumSupport::SymmetricLine;
    throw std::invalid_argument("unknown support '" + s + "' (expected positive or symmetric)");
}

inline OutputFormat parse_output(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + s + "' (expected csv or json)");
}

/// Parse the flat `key = value` config format. Lines starting with '#' and
/// blank lines are ignored; every key is optional.
inline ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));

        if (key == "state") {
            config.state = parse_state(value);
        } else if (key == "corr") {
            config.corr = parse_corr(value);
        } else if (key == "gamma") {
            config.gamma.gamma = detail::parse_double(key, value);
        } else if (key == "theta") {
            config.theta = detail::parse_double(key, value);
        } else if (key == "support") {
            config.support = parse_support(value);
        } else if (key == "eta") {
            config.eta = detail::parse_double(key, value);
        } else if (key == "beta") {
            config.beta = detail::parse_double(key, value);
        } else if (key == "eta_min") {
            if (!config.eta_range) config.eta_range = EtaRange{};
            config.eta_range->min = detail::parse_double(key, value);
        } else if (key == "eta_max") {
            if (!config.eta_range) config.eta_range = EtaRange{};
            config.eta_range->max = detail::parse_double(key, value);
        } else if (key == "steps") {
            if (!config.eta_range) config.eta_range = EtaRange{};
            config.eta_range->steps = detail::parse_int(key, value);
        } else if (key == "oracle_nodes") {
            config.oracle_nodes = detail::parse_int(key, value);
        } else if (key == "with_oracle") {
            config.with_oracle = detail::parse_bool(key, value);
        } else if (key == "output") {
            config.output = parse_output(value);
        } else if (key == "rel_tol") {
            config.tolerances.rel_tol = detail::parse_double(key, value);
        } else if (key == "abs_tol") {
            config.tolerances.abs_tol = detail::parse_double(key, value);
        } else if (key == "max_subdivisions") {
            config.tolerances.max_subdivisions = detail::parse_int(key, value);
        } else if (key == "truncation_sigmas") {
            config.tolerances.truncation_sigmas = detail::parse_double(key, value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return config;
}

/// Effective configuration in the same flat format parse_config_text reads.
inline std::string dump_config(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "state = " << (config.state ? to_string(*config.state) : "all") << '\n';
    out << "corr = " << (config.corr ? to_string(*config.corr) : "all") << '\n';
    out << "gamma = " << detail::format_full(config.gamma.gamma) << '\n';
    out << "theta = " << detail::format_full(config.theta) << '\n';
    out << "support = " << to_string(config.support) << '\n';
    if (config.eta) out << "eta = " << detail::format_full(*config.eta) << '\n';
    if (config.beta) out << "beta = " << detail::format_full(*config.beta) << '\n';
    if (config.eta_range) {
        out << "eta_min = " << detail::format_full(config.eta_range->min) << '\n';
        out << "eta_max = " << detail::format_full(config.eta_range->max) << '\n';
        out << "steps = " << config.eta_range->steps << '\n';
    }
    out << "oracle_nodes = " << config.oracle_nodes << '\n';
    out << "with_oracle = " << (config.with_oracle ? "true" : "false") << '\n';
    out << "output = " << (config.output == OutputFormat::Csv ? "csv" : "json") << '\n';
    out << "rel_tol = " << detail::format_full(config.tolerances.rel_tol) << '\n';
    out << "abs_tol = " << detail::format_full(config.tolerances.abs_tol) << '\n';
    out << "max_subdivisions = " << config.tolerances.max_subdivisions << '\n';
    out << "truncation_sigmas = " << detail::format_full(config.tolerances.truncation_sigmas) << '\n';
    return out.str();
}

}  // namespace spinfid
