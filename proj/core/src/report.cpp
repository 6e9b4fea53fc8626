#include "multirisk/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

#include "multirisk/expansion.hpp"
#include "multirisk/rss.hpp"

namespace multirisk {

namespace {

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

template <typename T>
std::string cell_or_empty(const std::optional<T>& v, int digits) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>) {
        return fixed(*v, digits);
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

std::string format_risk(double value) { return fixed(value, 4); }
std::string format_ratio(double value) { return fixed(value, 3); }

std::vector<ReportRow> build_report(const ProbTable& m, std::span<const std::uint64_t> sizes,
                                    ReportMode mode, const SimConfig& cfg) {
    const bool approx = mode != ReportMode::Sim;
    const bool sim = mode != ReportMode::Approx;
    RiskExpansion full{}, sub{};
    if (approx) {
        full = full_expansion(m);
        sub = submodel_expansion(m);
    }
    std::vector<ReportRow> rows;
    rows.reserve(sizes.size());
    for (std::uint64_t n : sizes) {
        ReportRow row;
        row.n = n;
        if (approx) {
            row.f_risk_app = eval_risk(full, n);
            row.s_risk_app = eval_risk(sub, n);
            row.ratio_app = *row.s_risk_app / *row.f_risk_app;
            row.rss_app = required_sample_size(full, sub, n).n_star;
        }
        if (sim) {
            const RiskEstimate f = simulate_risk(m, ModelKind::Full, n, cfg);
            const RiskEstimate s = simulate_risk(m, ModelKind::Submodel, n, cfg);
            row.f_risk_sim = f.mean;
            row.s_risk_sim = s.mean;
            row.ratio_sim = s.mean / f.mean;
            row.f_std_error = f.std_error;
            row.s_std_error = s.std_error;
            row.f_discarded = f.discarded;
            row.s_discarded = s.discarded;
            row.rss_sim = rss_sim(m, n, cfg).n_star;
        }
        rows.push_back(row);
    }
    return rows;
}

void print_report(std::ostream& out, std::span<const ReportRow> rows, ReportMode mode,
                  bool csv) {
    const bool approx = mode != ReportMode::Sim;
    const bool sim = mode != ReportMode::Approx;

    std::vector<std::string> headers = {"n"};
    if (approx) {
        headers.insert(headers.end(),
                       {"f.risk.app", "s.risk.app", "ratio.app", "r.s.s.app"});
    }
    if (sim) {
        headers.insert(headers.end(),
                       {"f.risk.sim", "s.risk.sim", "ratio.sim", "r.s.s.sim", "f.se", "s.se",
                        "f.disc", "s.disc"});
    }

    std::vector<std::vector<std::string>> body;
    for (const ReportRow& r : rows) {
        std::vector<std::string> line = {std::to_string(r.n)};
        if (approx) {
            line.push_back(cell_or_empty(r.f_risk_app, 4));
            line.push_back(cell_or_empty(r.s_risk_app, 4));
            line.push_back(cell_or_empty(r.ratio_app, 3));
            line.push_back(cell_or_empty(r.rss_app, 0));
        }
        if (sim) {
            line.push_back(cell_or_empty(r.f_risk_sim, 4));
            line.push_back(cell_or_empty(r.s_risk_sim, 4));
            line.push_back(cell_or_empty(r.ratio_sim, 3));
            line.push_back(cell_or_empty(r.rss_sim, 0));
            line.push_back(cell_or_empty(r.f_std_error, 6));
            line.push_back(cell_or_empty(r.s_std_error, 6));
            line.push_back(cell_or_empty(r.f_discarded, 0));
            line.push_back(cell_or_empty(r.s_discarded, 0));
        }
        body.push_back(std::move(line));
    }

    if (csv) {
        for (std::size_t i = 0; i < headers.size(); ++i) {
            if (i) out << ',';
            out << headers[i];
        }
        out << '\n';
        for (const auto& line : body) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) out << ',';
                out << line[i];
            }
            out << '\n';
        }
        return;
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) widths[i] = headers[i].size();
    for (const auto& line : body) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(widths[i])) << line[i];
        }
        out << '\n';
    };
    emit(headers);
    for (const auto& line : body) emit(line);
}

}  // namespace multirisk
