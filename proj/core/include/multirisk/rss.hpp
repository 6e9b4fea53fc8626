#pragma once

#include <cstdint>

#include "multirisk/expansion.hpp"
#include "multirisk/simulate.hpp"

namespace multirisk {

// Result of a required-sample-size query: the smallest-risk-matching
// integer size, the unrounded root, and search diagnostics.
struct RssResult {
    std::uint64_t n_star = 0;
    double root = 0.0;
    std::uint64_t iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Solves risk_search(n*) = risk_reference(n0) on the expansion scale:
// a quadratic in 1/n*. Throws DegenerateSubmodel when the searched
// expansion is identically zero (a fully known model).
RssResult required_sample_size(const RiskExpansion& reference, const RiskExpansion& search,
                               std::uint64_t n0);

// Required sample size of the known-group-sums submodel to match the
// full model at n0, from the closed-form expansions.
RssResult rss_approx(const ProbTable& m, std::uint64_t n0);

// Same query answered by simulation: brackets the sample size whose
// simulated submodel risk crosses the simulated full-model risk at n0,
// then interpolates linearly between grid points. All candidate sizes
// reuse the same seed (common random numbers).
RssResult rss_sim(const ProbTable& m, std::uint64_t n0, const SimConfig& cfg);

// General form used by rss_sim and by tests: match `search`'s simulated
// risk to `reference`'s simulated risk at n0.
RssResult rss_sim_between(const ProbTable& m, ModelKind reference, ModelKind search,
                          std::uint64_t n0, const SimConfig& cfg);

}  // namespace multirisk
