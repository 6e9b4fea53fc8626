#pragma once

#include <cstdint>
#include <optional>

#include "multirisk/prob_table.hpp"

namespace multirisk {

enum class ModelKind { Full, Submodel };

// Which replicates to throw away before estimating. SubmodelGroups is the
// paper's rule: a replicate with an empty group cannot estimate that
// group's conditionals.
enum class DiscardPolicy { None, SubmodelGroups, AllCells };

struct SimConfig {
    std::uint64_t replicates = 10'000;
    std::uint64_t seed = 0;
    // Unset picks the model default: None for the full model (its MLE is
    // defined for any sample), SubmodelGroups for the submodel.
    std::optional<DiscardPolicy> discard;
    unsigned workers = 1;
};

struct RiskEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t kept = 0;
    std::uint64_t discarded = 0;
};

// Monte Carlo estimate of the KL risk of the chosen MLE at sample size n.
// Discarded replicates are redrawn so `kept` always equals the configured
// replicate count. Output is bit-identical for a fixed seed regardless of
// the worker count: each replicate owns a counter-derived random stream
// and the reduction runs in replicate order.
RiskEstimate simulate_risk(const ProbTable& m, ModelKind model, std::uint64_t n,
                           const SimConfig& cfg);

// Exact risk by enumerating every outcome of the multinomial, conditioned
// and renormalized per the discard policy. Intended as an oracle for tiny
// instances; throws TooLarge beyond ~1e7 outcomes.
double exact_risk(const ProbTable& m, ModelKind model, std::uint64_t n,
                  DiscardPolicy condition);

// Union bound on the probability that a draw of size n is discarded:
// the sum of (1 - P(event))^n over the conditioned events. May exceed 1.
double discard_probability_bound(const ProbTable& m, std::uint64_t n,
                                 DiscardPolicy policy);

}  // namespace multirisk
