#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfid/scenario.hpp"

namespace spinfid {

/// Floating-point text with 12 significant digits (the CSV contract).
inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct FidelityRecord {
    SpinStateKind state;
    CorrelationMode corr;
    double gamma;
    double theta;
    double eta;
    WignerMoments moments;
    double closed_form;
    std::optional<double> oracle;
    std::optional<double> discrepancy;
};

/// Single-point evaluation: moments, closed-form fidelity and (on request)
/// the brute-force oracle value with its signed difference from the closed
/// form.
inline FidelityRecord run_fidelity(const ScenarioConfig& config) {
    config.validate();
    if (!config.state || !config.corr) {
        throw std::invalid_argument("fidelity evaluates one state and one correlation mode; "
                                    "'all' only applies to sweeps");
    }
    FidelityRecord record{};
    record.state = *config.state;
    record.corr = *config.corr;
    record.gamma = config.gamma.gamma;
    record.theta = config.theta;
    record.eta = config.resolve_eta();
    record.moments = compute_moments(config.gamma, record.eta, record.theta, config.tolerances);
    record.closed_form = closed_form_fidelity(record.state, record.corr, record.moments);
    if (config.with_oracle) {
        const MomentumGrid grid = build_momentum_grid(config.gamma, config.oracle_nodes, config.support);
        record.oracle = oracle_fidelity(record.state, record.corr, grid, record.eta, record.theta);
        record.discrepancy = *record.oracle - record.closed_form;
    }
    return record;
}

inline std::string to_csv(const FidelityRecord& r) {
    std::string head = "state,corr,gamma,theta,eta,m1,m2,m3,closed_form";
    std::string row = std::string(to_string(r.state)) + "," + to_string(r.corr) + "," +
                      format_value(r.gamma) + "," + format_value(r.theta) + "," +
                      format_value(r.eta) + "," + format_value(r.moments.m1) + "," +
                      format_value(r.moments.m2) + "," + format_value(r.moments.m3) + "," +
                      format_value(r.closed_form);
    if (r.oracle) {
        head += ",oracle,discrepancy";
        row += "," + format_value(*r.oracle) + "," + format_value(*r.discrepancy);
    }
    return head + "\n" + row + "\n";
}

inline nlohmann::ordered_json to_json(const FidelityRecord& r) {
    nlohmann::ordered_json j;
    j["state"] = to_string(r.state);
    j["corr"] = to_string(r.corr);
    j["gamma"] = r.gamma;
    j["theta"] = r.theta;
    j["eta"] = r.eta;
    j["m1"] = r.moments.m1;
    j["m2"] = r.moments.m2;
    j["m3"] = r.moments.m3;
    j["closed_form"] = r.closed_form;
    if (r.oracle) {
        j["oracle"] = *r.oracle;
        j["discrepancy"] = *r.discrepancy;
    }
    return j;
}

struct SweepColumn {
    SpinStateKind state;
    CorrelationMode corr;
    std::string name;  // F_<state>_<corr>
};

struct SweepRow {
    double eta;
    std::vector<double> values;
};

struct SweepResult {
    std::vector<SweepColumn> columns;
    std::vector<SweepRow> rows;
};

inline std::vector<SweepColumn> sweep_columns(const ScenarioConfig& config) {
    std::vector<SpinStateKind> states;
    if (config.state) {
        states = {*config.state};
    } else {
        states = {SpinStateKind::GHZ, SpinStateKind::W};
    }
    std::vector<CorrelationMode> corrs;
    if (config.corr) {
        corrs = {*config.corr};
    } else {
        corrs = {CorrelationMode::Product, CorrelationMode::PairCorrelated,
                 CorrelationMode::TripleCorrelated};
    }
    std::vector<SweepColumn> columns;
    for (SpinStateKind s : states) {
        for (CorrelationMode c : corrs) {
            columns.push_back({s, c, std::string("F_") + to_string(s) + "_" + to_string(c)});
        }
    }
    return columns;
}

/// Rapidity sweep of the requested closed-form fidelities. The three
/// moments are computed once per eta and shared across all columns.
inline SweepResult run_sweep(const ScenarioConfig& config) {
    config.validate();
    const EtaRange range = config.resolve_range();
    SweepResult result;
    result.columns = sweep_columns(config);
    result.rows.reserve(range.steps);
    for (int i = 0; i < range.steps; ++i) {
        const double eta = range.at(i);
        const WignerMoments moments =
            compute_moments(config.gamma, eta, config.theta, config.tolerances);
        SweepRow row{eta, {}};
        row.values.reserve(result.columns.size());
        for (const SweepColumn& col : result.columns) {
            row.values.push_back(closed_form_fidelity(col.state, col.corr, moments));
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

inline std::string to_csv(const SweepResult& sweep) {
    std::string out = "eta";
    for (const SweepColumn& col : sweep.columns) {
        out += "," + col.name;
    }
    out += "\n";
    for (const SweepRow& row : sweep.rows) {
        out += format_value(row.eta);
        for (double v : row.values) {
            out += "," + format_value(v);
        }
        out += "\n";
    }
    return out;
}

inline nlohmann::ordered_json to_json(const SweepResult& sweep) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& row : sweep.rows) {
        nlohmann::ordered_json j;
        j["eta"] = row.eta;
        for (std::size_t i = 0; i < sweep.columns.size(); ++i) {
            j[sweep.columns[i].name] = row.values[i];
        }
        rows.push_back(std::move(j));
    }
    return rows;
}

}  // namespace spinfid
