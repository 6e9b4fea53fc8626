// multirisk command-line front end.
//
// Subcommands:
//   expand    closed-form risk expansions for a table file
//   simulate  Monte Carlo risk estimates for a table file
//   report    full risk/r.s.s. tables for the bundled examples
//
// Exit codes: 0 success, 2 parse failure, 3 validation failure,
// 4 simulation failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "multirisk/datasets.hpp"
#include "multirisk/expansion.hpp"
#include "multirisk/report.hpp"
#include "multirisk/rss.hpp"
#include "multirisk/simulate.hpp"
#include "multirisk/table_io.hpp"

namespace {

using namespace multirisk;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSimulation = 4;

struct CommonOpts {
    std::string table_path;
    std::string groups;
    std::vector<std::uint64_t> sizes;
    bool csv = false;
    bool renormalize = false;
};

ProbTable load_table(const CommonOpts& opts) {
    const TableFile file = read_table_file(std::filesystem::path(opts.table_path));
    std::optional<GroupSpec> override_spec;
    if (!opts.groups.empty()) override_spec = parse_group_spec(opts.groups);
    return to_prob_table(file, override_spec, opts.renormalize);
}

ReportMode parse_mode(const std::string& mode) {
    if (mode == "approx") return ReportMode::Approx;
    if (mode == "sim") return ReportMode::Sim;
    if (mode == "both") return ReportMode::Both;
    throw CLI::ValidationError("--mode", "expected approx, sim or both");
}

int cmd_expand(const CommonOpts& opts) {
    const ProbTable table = load_table(opts);
    const RiskExpansion full = full_expansion(table);
    const RiskExpansion sub = submodel_expansion(table);
    const RiskExpansion diff = risk_difference(table);
    const std::uint64_t threshold = negativity_threshold(table);

    std::vector<std::string> headers = {"n",        "f.risk.app", "s.risk.app",
                                        "ratio.app", "diff.app",   "r.s.s.app"};
    if (opts.csv) {
        std::cout << "n,f.risk.app,s.risk.app,ratio.app,diff.app,r.s.s.app\n";
    } else {
        std::cout << "n  f.risk.app  s.risk.app  ratio.app  diff.app  r.s.s.app\n";
    }
    bool warn = false;
    for (std::uint64_t n : opts.sizes) {
        const double f = eval_risk(full, n);
        const double s = eval_risk(sub, n);
        const std::uint64_t rss = required_sample_size(full, sub, n).n_star;
        const char sep = opts.csv ? ',' : ' ';
        std::cout << n << sep << format_risk(f) << sep << format_risk(s) << sep
                  << format_ratio(s / f) << sep << format_risk(eval_risk(diff, n)) << sep
                  << rss << '\n';
        if (n <= threshold) warn = true;
    }
    std::cerr << "negativity threshold: " << threshold << '\n';
    if (warn) {
        std::cerr << "warning: some requested n are at or below the threshold; the "
                     "expansion predicts the submodel to be harmful there\n";
    }
    return 0;
}

int cmd_simulate(const CommonOpts& opts, const SimConfig& cfg) {
    const ProbTable table = load_table(opts);
    if (opts.csv) {
        std::cout << "n,f.risk.sim,f.se,f.disc,s.risk.sim,s.se,s.disc,ratio.sim\n";
    } else {
        std::cout << "n  f.risk.sim  f.se  f.disc  s.risk.sim  s.se  s.disc  ratio.sim\n";
    }
    for (std::uint64_t n : opts.sizes) {
        try {
            const RiskEstimate f = simulate_risk(table, ModelKind::Full, n, cfg);
            const RiskEstimate s = simulate_risk(table, ModelKind::Submodel, n, cfg);
            const char sep = opts.csv ? ',' : ' ';
            std::cout << n << sep << format_risk(f.mean) << sep << f.std_error << sep
                      << f.discarded << sep << format_risk(s.mean) << sep << s.std_error
                      << sep << s.discarded << sep << format_ratio(s.mean / f.mean) << '\n';
        } catch (const SimulationError& e) {
            std::cerr << "n=" << n << ": " << e.what() << " (discard probability bound "
                      << discard_probability_bound(table, n, DiscardPolicy::SubmodelGroups)
                      << ")\n";
            throw;
        }
    }
    return 0;
}

int cmd_report(int example_id, const std::string& mode_name, const SimConfig& cfg, bool csv) {
    const BundledExample& ex = bundled_example(example_id);
    const ReportMode mode = parse_mode(mode_name);
    const auto rows = build_report(ex.table, ex.sample_sizes, mode, cfg);
    if (!csv) {
        std::cout << "example " << ex.id << " (" << ex.name
                  << "), negativity threshold " << negativity_threshold(ex.table) << "\n";
    }
    print_report(std::cout, rows, mode, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KL risk of multinomial MLEs under known group sums"};
    app.require_subcommand(1);

    CommonOpts opts;
    SimConfig cfg;
    int example_id = 1;
    std::string mode = "approx";

    auto add_table_opts = [&](CLI::App* sub) {
        sub->add_option("--table", opts.table_path, "table file path")->required();
        sub->add_option("--groups", opts.groups,
                        "grouping: rows, cols, or 1-based index lists like '1,2;3,4'");
        sub->add_option("--n", opts.sizes, "sample sizes")->required()->delimiter(',');
        sub->add_flag("--csv", opts.csv, "emit CSV");
        sub->add_flag("--renormalize", opts.renormalize,
                      "rescale tables whose rounded entries do not sum to 1");
    };
    auto add_sim_opts = [&](CLI::App* sub) {
        sub->add_option("--reps", cfg.replicates, "Monte Carlo replicates");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--workers", cfg.workers, "worker threads");
    };

    CLI::App* expand = app.add_subcommand("expand", "closed-form risk expansions");
    add_table_opts(expand);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo risk estimates");
    add_table_opts(simulate);
    add_sim_opts(simulate);

    CLI::App* report = app.add_subcommand("report", "bundled example reports");
    report->add_option("--example", example_id, "bundled example id (1, 2 or 3)")
        ->check(CLI::Range(1, 3));
    report->add_option("--mode", mode, "approx, sim or both")
        ->check(CLI::IsMember({"approx", "sim", "both"}));
    add_sim_opts(report);
    report->add_flag("--csv", opts.csv, "emit CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (expand->parsed()) return cmd_expand(opts);
        if (simulate->parsed()) return cmd_simulate(opts, cfg);
        return cmd_report(example_id, mode, cfg, opts.csv);
    } catch (const multirisk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const multirisk::SimulationError& e) {
        std::cerr << "simulation error: " << e.what() << '\n';
        return kExitSimulation;
    } catch (const multirisk::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
