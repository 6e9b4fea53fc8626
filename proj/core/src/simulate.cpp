#include "multirisk/simulate.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace multirisk {

namespace {

constexpr std::uint64_t kMaxAttemptsPerReplicate = 1'000'000;
constexpr double kEnumerationGuard = 1e7;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream per replicate: results do not depend on how
// replicates are distributed over workers.
std::mt19937_64 replicate_engine(std::uint64_t seed, std::uint64_t replicate) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(replicate + 1)));
}

// Multinomial draw by binomial splitting down the cell list.
void draw_multinomial(std::mt19937_64& rng, std::uint64_t n,
                      const std::vector<double>& cells,
                      std::vector<std::uint64_t>& out) {
    std::uint64_t remaining = n;
    double mass = 1.0;
    const std::size_t k = cells.size();
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (remaining == 0) {
            out[c] = 0;
            continue;
        }
        double p = cells[c] / mass;
        if (p >= 1.0) {
            out[c] = remaining;
            remaining = 0;
        } else if (p <= 0.0) {
            out[c] = 0;
        } else {
            std::binomial_distribution<std::uint64_t> bin(remaining, p);
            const std::uint64_t x = bin(rng);
            out[c] = x;
            remaining -= x;
        }
        mass -= cells[c];
    }
    out[k - 1] = remaining;
}

DiscardPolicy effective_policy(ModelKind model, const SimConfig& cfg) {
    if (cfg.discard) return *cfg.discard;
    return model == ModelKind::Full ? DiscardPolicy::None : DiscardPolicy::SubmodelGroups;
}

bool keep_draw(const std::vector<std::uint64_t>& counts,
               const std::vector<std::uint64_t>& group_counts, DiscardPolicy policy) {
    switch (policy) {
        case DiscardPolicy::None:
            return true;
        case DiscardPolicy::SubmodelGroups:
            for (auto g : group_counts) {
                if (g == 0) return false;
            }
            return true;
        case DiscardPolicy::AllCells:
            for (auto c : counts) {
                if (c == 0) return false;
            }
            return true;
    }
    return true;
}

// KL divergence of the plug-in MLE for one sample, computed without
// materializing the estimate.
double sample_kl(const ProbTable& m, ModelKind model,
                 const std::vector<std::uint64_t>& counts,
                 const std::vector<std::uint64_t>& group_counts, std::uint64_t n) {
    double d = 0.0;
    if (model == ModelKind::Full) {
        const double nn = static_cast<double>(n);
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] == 0) continue;
            const double q = static_cast<double>(counts[c]) / nn;
            d += q * std::log(q / m.cell(c));
        }
    } else {
        const auto& grouping = m.grouping();
        for (std::size_t i = 0; i < grouping.size(); ++i) {
            const double ci = m.group_sum(i);
            const double xi = static_cast<double>(group_counts[i]);
            for (std::size_t idx : grouping[i]) {
                if (counts[idx] == 0) continue;
                // Divide first: a singleton group then gives q == ci exactly.
                const double q = ci * (static_cast<double>(counts[idx]) / xi);
                d += q * std::log(q / m.cell(idx));
            }
        }
    }
    return d;
}

void check_feasible(const ProbTable& m, std::uint64_t n, DiscardPolicy policy) {
    if (policy == DiscardPolicy::SubmodelGroups && n < m.group_count()) {
        throw SimulationError(Errc::AllDiscarded,
                              "every draw of size " + std::to_string(n) +
                                  " leaves one of " + std::to_string(m.group_count()) +
                                  " groups empty");
    }
    if (policy == DiscardPolicy::AllCells && n < m.cell_count()) {
        throw SimulationError(Errc::AllDiscarded,
                              "every draw of size " + std::to_string(n) +
                                  " leaves one of " + std::to_string(m.cell_count()) +
                                  " cells empty");
    }
}

}  // namespace

RiskEstimate simulate_risk(const ProbTable& m, ModelKind model, std::uint64_t n,
                           const SimConfig& cfg) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    if (cfg.replicates == 0) throw std::invalid_argument("replicates must be positive");
    const DiscardPolicy policy = effective_policy(model, cfg);
    if (model == ModelKind::Submodel && policy == DiscardPolicy::None) {
        throw std::invalid_argument(
            "submodel simulation needs a discard policy that keeps every group populated");
    }
    check_feasible(m, n, policy);

    const std::uint64_t reps = cfg.replicates;
    std::vector<double> values(reps, 0.0);
    std::vector<std::uint64_t> discards(reps, 0);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(cfg.workers,
                                        static_cast<unsigned>(std::min<std::uint64_t>(
                                            reps, std::thread::hardware_concurrency()
                                                      ? std::thread::hardware_concurrency() * 4
                                                      : 16))));

    auto run_range = [&](std::uint64_t first, std::uint64_t last, std::exception_ptr& err) {
        try {
            std::vector<std::uint64_t> counts(m.cell_count(), 0);
            std::vector<std::uint64_t> gcounts(m.group_count(), 0);
            for (std::uint64_t r = first; r < last; ++r) {
                auto rng = replicate_engine(cfg.seed, r);
                std::uint64_t attempts = 0;
                for (;;) {
                    draw_multinomial(rng, n, m.cells(), counts);
                    for (std::size_t i = 0; i < gcounts.size(); ++i) gcounts[i] = 0;
                    for (std::size_t i = 0; i < m.grouping().size(); ++i) {
                        for (std::size_t idx : m.grouping()[i]) gcounts[i] += counts[idx];
                    }
                    if (keep_draw(counts, gcounts, policy)) break;
                    ++discards[r];
                    if (++attempts >= kMaxAttemptsPerReplicate) {
                        throw SimulationError(
                            Errc::AllDiscarded,
                            "no draw kept after " + std::to_string(attempts) +
                                " attempts; n is far too small for this table");
                    }
                }
                values[r] = sample_kl(m, model, counts, gcounts, n);
            }
        } catch (...) {
            err = std::current_exception();
        }
    };

    if (workers == 1) {
        std::exception_ptr err;
        run_range(0, reps, err);
        if (err) std::rethrow_exception(err);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        const std::uint64_t chunk = (reps + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t last = std::min(reps, first + chunk);
            if (first >= last) break;
            pool.emplace_back(run_range, first, last, std::ref(errs[w]));
        }
        for (auto& t : pool) t.join();
        for (auto& e : errs) {
            if (e) std::rethrow_exception(e);
        }
    }

    // Fixed-order reduction keeps the result independent of scheduling.
    RiskEstimate out;
    out.kept = reps;
    double sum = 0.0;
    for (std::uint64_t r = 0; r < reps; ++r) {
        sum += values[r];
        out.discarded += discards[r];
    }
    out.mean = sum / static_cast<double>(reps);
    if (reps > 1) {
        double ss = 0.0;
        for (std::uint64_t r = 0; r < reps; ++r) {
            const double d = values[r] - out.mean;
            ss += d * d;
        }
        out.std_error = std::sqrt(ss / static_cast<double>(reps - 1)) /
                        std::sqrt(static_cast<double>(reps));
    }
    return out;
}

double exact_risk(const ProbTable& m, ModelKind model, std::uint64_t n,
                  DiscardPolicy condition) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    if (model == ModelKind::Submodel && condition == DiscardPolicy::None) {
        throw std::invalid_argument(
            "submodel enumeration needs a condition that keeps every group populated");
    }
    const std::size_t k = m.cell_count();
    const double outcomes = std::exp(std::lgamma(static_cast<double>(n + k)) -
                                     std::lgamma(static_cast<double>(n + 1)) -
                                     std::lgamma(static_cast<double>(k)));
    if (outcomes > kEnumerationGuard) {
        throw ValidationError(Errc::TooLarge,
                              "enumeration would visit ~" + std::to_string(outcomes) +
                                  " outcomes (guard: 1e7)");
    }
    check_feasible(m, n, condition);

    // Factorial and log-probability tables for fast per-outcome pmf.
    std::vector<double> lfact(n + 1, 0.0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        lfact[i] = lfact[i - 1] + std::log(static_cast<double>(i));
    }
    std::vector<double> logm(k);
    for (std::size_t c = 0; c < k; ++c) logm[c] = std::log(m.cell(c));

    std::vector<std::uint64_t> counts(k, 0);
    std::vector<std::uint64_t> gcounts(m.group_count(), 0);
    double kept_mass = 0.0;
    double acc = 0.0;

    auto visit = [&](const auto& self, std::size_t cell, std::uint64_t remaining,
                     double logpmf) -> void {
        if (cell + 1 == k) {
            counts[cell] = remaining;
            logpmf += static_cast<double>(remaining) * logm[cell] - lfact[remaining];
            for (std::size_t i = 0; i < gcounts.size(); ++i) gcounts[i] = 0;
            for (std::size_t i = 0; i < m.grouping().size(); ++i) {
                for (std::size_t idx : m.grouping()[i]) gcounts[i] += counts[idx];
            }
            if (!keep_draw(counts, gcounts, condition)) return;
            const double p = std::exp(logpmf);
            kept_mass += p;
            acc += p * sample_kl(m, model, counts, gcounts, n);
            return;
        }
        for (std::uint64_t x = 0; x <= remaining; ++x) {
            counts[cell] = x;
            self(self, cell + 1, remaining - x,
                 logpmf + static_cast<double>(x) * logm[cell] - lfact[x]);
        }
    };
    visit(visit, 0, n, lfact[n]);

    if (kept_mass <= 0.0) {
        throw SimulationError(Errc::AllDiscarded, "the condition excludes every outcome");
    }
    return acc / kept_mass;
}

double discard_probability_bound(const ProbTable& m, std::uint64_t n,
                                 DiscardPolicy policy) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    auto miss = [n](double p) {
        if (p >= 1.0) return 0.0;
        return std::exp(static_cast<double>(n) * std::log1p(-p));
    };
    double bound = 0.0;
    switch (policy) {
        case DiscardPolicy::None:
            break;
        case DiscardPolicy::SubmodelGroups:
            for (std::size_t i = 0; i < m.group_count(); ++i) bound += miss(m.group_sum(i));
            break;
        case DiscardPolicy::AllCells:
            for (double c : m.cells()) bound += miss(c);
            break;
    }
    return bound;
}

}  // namespace multirisk
