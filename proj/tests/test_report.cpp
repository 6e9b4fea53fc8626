#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "multirisk/datasets.hpp"
#include "multirisk/report.hpp"
#include "multirisk/table_io.hpp"

using namespace multirisk;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("bundled tables match the shipped data files") {
    const ProbTable bc = to_prob_table(read_table_file(std::filesystem::path(TEST_DATA_DIR) /
                                                       "breast_cancer.tsv"),
                                       std::nullopt, false);
    CHECK(bc.cells() == bundled_example(2).table.cells());
    CHECK(bc.grouping() == bundled_example(2).table.grouping());

    const ProbTable hh = to_prob_table(read_table_file(std::filesystem::path(TEST_DATA_DIR) /
                                                       "household.tsv"),
                                       std::nullopt, true);
    CHECK(hh.cells() == bundled_example(3).table.cells());
    CHECK(hh.grouping() == bundled_example(3).table.grouping());
}

TEST_CASE("approx report reproduces the uniform table rows") {
    const BundledExample& ex = bundled_example(1);
    const SimConfig cfg;
    const auto rows = build_report(ex.table, ex.sample_sizes, ReportMode::Approx, cfg);
    REQUIRE(rows.size() == 7);

    CHECK(rows[0].n == 100);
    CHECK(format_risk(*rows[0].f_risk_app) == "1.3283");
    CHECK(format_risk(*rows[0].s_risk_app) == "1.3332");
    CHECK(format_ratio(*rows[0].ratio_app) == "1.004");
    CHECK(*rows[0].rss_app == 100);

    CHECK(rows[6].n == 2000);
    CHECK(format_risk(*rows[6].f_risk_app) == "0.0506");
    CHECK(format_risk(*rows[6].s_risk_app) == "0.0504");
    CHECK(format_ratio(*rows[6].ratio_app) == "0.996");  // 0.99555... at 3 decimals
    CHECK(*rows[6].rss_app == 1991);

    CHECK_FALSE(rows[0].f_risk_sim.has_value());
    CHECK_FALSE(rows[0].rss_sim.has_value());
}

TEST_CASE("csv output has the fixed column order") {
    const BundledExample& ex = bundled_example(2);
    const SimConfig cfg;
    const std::uint64_t sizes[] = {200, 400};
    const auto rows = build_report(ex.table, sizes, ReportMode::Approx, cfg);

    std::ostringstream out;
    print_report(out, rows, ReportMode::Approx, /*csv=*/true);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "n,f.risk.app,s.risk.app,ratio.app,r.s.s.app");
    CHECK(lines[1] == "200,0.0367,0.0281,0.766,158");
    CHECK(lines[2] == "400,0.0179,0.0133,0.741,302");
}

TEST_CASE("aligned text output carries the same cells") {
    const BundledExample& ex = bundled_example(2);
    const SimConfig cfg;
    const std::uint64_t sizes[] = {200};
    const auto rows = build_report(ex.table, sizes, ReportMode::Approx, cfg);

    std::ostringstream out;
    print_report(out, rows, ReportMode::Approx, /*csv=*/false);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("f.risk.app") != std::string::npos);
    CHECK(lines[1].find("0.0367") != std::string::npos);
    CHECK(lines[1].find("158") != std::string::npos);
}

TEST_CASE("both mode populates the simulation columns") {
    SimConfig cfg;
    cfg.replicates = 500;
    cfg.seed = 17;
    cfg.workers = 4;
    const std::uint64_t sizes[] = {200};
    const auto rows = build_report(bundled_example(2).table, sizes, ReportMode::Both, cfg);
    REQUIRE(rows.size() == 1);
    const ReportRow& r = rows[0];
    CHECK(r.f_risk_app.has_value());
    CHECK(r.f_risk_sim.has_value());
    CHECK(r.s_risk_sim.has_value());
    CHECK(r.ratio_sim.has_value());
    CHECK(r.rss_sim.has_value());
    CHECK(*r.f_std_error > 0.0);
    CHECK(*r.s_std_error > 0.0);
    // At n=200 the submodel is past its negativity threshold of 28, so the
    // simulated ratio should clearly favor it.
    CHECK(*r.ratio_sim < 1.0);

    std::ostringstream out;
    print_report(out, rows, ReportMode::Both, /*csv=*/true);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "n,f.risk.app,s.risk.app,ratio.app,r.s.s.app,"
          "f.risk.sim,s.risk.sim,ratio.sim,r.s.s.sim,f.se,s.se,f.disc,s.disc");
}
