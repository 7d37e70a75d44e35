#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfid/commands.hpp"
#include "spinfid/scenario.hpp"

using namespace spinfid;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("config text round trip", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::W;
    config.corr = std::nullopt;
    config.gamma.gamma = 5.5;
    config.theta = 0.25;
    config.support = MomentumSupport::PositiveAxis;
    config.eta_range = EtaRange{0.5, 7.5, 31};
    config.oracle_nodes = 96;
    config.with_oracle = true;
    config.output = OutputFormat::Json;
    config.tolerances.rel_tol = 1e-9;

    const ScenarioConfig back = parse_config_text(dump_config(config));
    CHECK(back.state == config.state);
    CHECK(back.corr == config.corr);
    CHECK(back.gamma.gamma == config.gamma.gamma);
    CHECK(back.theta == config.theta);
    CHECK(back.support == config.support);
    REQUIRE(back.eta_range.has_value());
    CHECK(back.eta_range->min == config.eta_range->min);
    CHECK(back.eta_range->max == config.eta_range->max);
    CHECK(back.eta_range->steps == config.eta_range->steps);
    CHECK(back.oracle_nodes == config.oracle_nodes);
    CHECK(back.with_oracle == config.with_oracle);
    CHECK(back.output == config.output);
    CHECK(back.tolerances.rel_tol == config.tolerances.rel_tol);
    CHECK(dump_config(back) == dump_config(config));
}

TEST_CASE("config parsing accepts comments and rejects junk", "[commands]") {
    const ScenarioConfig config = parse_config_text(
        "# comment\n"
        "\n"
        "state = ghz\n"
        "eta = 2.5\n"
        "  gamma =  7 \n");
    CHECK(config.state == SpinStateKind::GHZ);
    CHECK(config.eta == 2.5);
    CHECK(config.gamma.gamma == 7.0);

    CHECK_THROWS_AS(parse_config_text("nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("unknown_key = 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("eta = abc\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("steps = 2.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("with_oracle = maybe\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("state = xyz\n"), std::invalid_argument);
}

TEST_CASE("scenario validation", "[commands]") {
    ScenarioConfig config;
    config.eta = 1.0;
    config.beta = 0.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.eta = -1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.beta = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.eta_range = EtaRange{0.0, 10.0, 1};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.eta_range = EtaRange{5.0, 2.0, 10};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.oracle_nodes = 4;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    config = {};
    config.eta = 3.0;
    CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);

    config = {};
    config.eta_range = EtaRange{};
    CHECK_THROWS_AS(run_fidelity(config), std::invalid_argument);

    config = {};
    config.state = std::nullopt;
    CHECK_THROWS_AS(run_fidelity(config), std::invalid_argument);
}

TEST_CASE("single point fidelity at rest", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::GHZ;
    config.corr = CorrelationMode::Product;
    config.eta = 0.0;
    const FidelityRecord r = run_fidelity(config);
    CHECK_THAT(r.closed_form, WithinAbs(1.0, 1e-12));

    config.state = SpinStateKind::W;
    CHECK_THAT(run_fidelity(config).closed_form, WithinAbs(1.0, 1e-12));
}

TEST_CASE("speed fraction input converts to rapidity", "[commands]") {
    ScenarioConfig config;
    config.beta = 0.9;
    const FidelityRecord r = run_fidelity(config);
    CHECK_THAT(r.eta, WithinAbs(1.4722194895832204, 1e-12));
}

TEST_CASE("oracle agrees with the ghz closed form through the pipeline", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::GHZ;
    config.corr = CorrelationMode::Product;
    config.eta = 10.0;
    config.with_oracle = true;
    const FidelityRecord r = run_fidelity(config);
    REQUIRE(r.oracle.has_value());
    REQUIRE(r.discrepancy.has_value());
    CHECK(std::abs(*r.discrepancy) < 1e-8);
}

TEST_CASE("sweep emits the pinned csv schema", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::GHZ;
    config.corr = std::nullopt;
    config.eta_range = EtaRange{0.0, 10.0, 201};
    const SweepResult sweep = run_sweep(config);
    const std::string csv = to_csv(sweep);

    CHECK(csv.find('\r') == std::string::npos);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 202);
    CHECK(lines[0] == "eta,F_ghz_product,F_ghz_pair,F_ghz_triple");
    CHECK(lines[1] == "0,1,1,1");

    // every fidelity column non-increasing along the sweep
    for (std::size_t col = 0; col < sweep.columns.size(); ++col) {
        for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
            REQUIRE(sweep.rows[i].values[col] <= sweep.rows[i - 1].values[col] + 1e-10);
        }
    }
}

TEST_CASE("w sweep ordering at the far end", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::W;
    config.corr = std::nullopt;
    config.eta_range = EtaRange{0.0, 10.0, 21};
    const SweepResult sweep = run_sweep(config);
    const SweepRow& last = sweep.rows.back();
    CHECK(last.eta == 10.0);
    // columns: product, pair, triple
    CHECK(last.values[0] >= last.values[1]);
    CHECK(last.values[1] >= last.values[2]);
}

TEST_CASE("identical configs produce identical bytes", "[commands]") {
    ScenarioConfig config;
    config.state = std::nullopt;
    config.corr = std::nullopt;
    config.eta_range = EtaRange{0.0, 4.0, 9};
    CHECK(to_csv(run_sweep(config)) == to_csv(run_sweep(config)));
    CHECK(to_json(run_sweep(config)).dump() == to_json(run_sweep(config)).dump());

    ScenarioConfig point;
    point.eta = 2.0;
    point.with_oracle = true;
    CHECK(to_csv(run_fidelity(point)) == to_csv(run_fidelity(point)));
}

TEST_CASE("json rows mirror the csv columns", "[commands]") {
    ScenarioConfig config;
    config.state = std::nullopt;
    config.corr = std::nullopt;
    config.eta_range = EtaRange{0.0, 2.0, 3};
    const SweepResult sweep = run_sweep(config);
    const nlohmann::ordered_json rows = to_json(sweep);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["eta"] == 0.0);
    for (const char* key : {"F_ghz_product", "F_ghz_pair", "F_ghz_triple", "F_w_product",
                            "F_w_pair", "F_w_triple"}) {
        REQUIRE(rows[0].contains(key));
        CHECK_THAT(rows[0][key].get<double>(), WithinAbs(1.0, 1e-12));
    }
    CHECK(rows[2]["eta"] == 2.0);
}

TEST_CASE("fidelity record serialization", "[commands]") {
    ScenarioConfig config;
    config.state = SpinStateKind::W;
    config.corr = CorrelationMode::TripleCorrelated;
    config.eta = 5.0;
    config.with_oracle = true;
    const FidelityRecord r = run_fidelity(config);

    const std::string csv = to_csv(r);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "state,corr,gamma,theta,eta,m1,m2,m3,closed_form,oracle,discrepancy");
    CHECK(lines[1].substr(0, 9) == "w,triple,");

    const nlohmann::ordered_json j = to_json(r);
    CHECK(j["state"] == "w");
    CHECK(j["corr"] == "triple");
    CHECK(j["eta"] == 5.0);
    CHECK(j.contains("oracle"));
    CHECK(j.contains("discrepancy"));
}

TEST_CASE("twelve significant digits in emitted values", "[commands]") {
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(format_value(0.05) == "0.05");
    CHECK(format_value(0.881394500851147) == "0.881394500851");
}
