#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multirisk/prob_table.hpp"
#include "multirisk/simulate.hpp"

namespace multirisk {

enum class ReportMode { Approx, Sim, Both };

// One line of a risk/r.s.s. report. The r.s.s. columns use n0 = n.
struct ReportRow {
    std::uint64_t n = 0;
    std::optional<double> f_risk_app;
    std::optional<double> s_risk_app;
    std::optional<double> ratio_app;
    std::optional<std::uint64_t> rss_app;
    std::optional<double> f_risk_sim;
    std::optional<double> s_risk_sim;
    std::optional<double> ratio_sim;
    std::optional<std::uint64_t> rss_sim;
    std::optional<double> f_std_error;
    std::optional<double> s_std_error;
    std::optional<std::uint64_t> f_discarded;
    std::optional<std::uint64_t> s_discarded;
};

std::vector<ReportRow> build_report(const ProbTable& m, std::span<const std::uint64_t> sizes,
                                    ReportMode mode, const SimConfig& cfg);

// Paper-style rounding: risks to 4 decimals, ratios to 3.
std::string format_risk(double value);
std::string format_ratio(double value);

// Plain aligned text, or CSV with the fixed ReportRow column order when
// `csv` is set.
void print_report(std::ostream& out, std::span<const ReportRow> rows, ReportMode mode,
                  bool csv);

}  // namespace multirisk
