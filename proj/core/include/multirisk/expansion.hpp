#pragma once

#include <cstdint>
#include <span>

#include "multirisk/prob_table.hpp"

namespace multirisk {

// Second-order risk approximation risk(n) = first_order/n + second_order/n^2.
struct RiskExpansion {
    double first_order = 0.0;   // coefficient of 1/n, half the model dimension
    double second_order = 0.0;  // coefficient of 1/n^2
};

double eval_risk(const RiskExpansion& e, std::uint64_t n);

// Risk expansion of the full-model MLE; the grouping is ignored.
RiskExpansion full_expansion(const ProbTable& m);

// Second-order coefficient of the within-group (second-stage) full model:
// 2 (m_i. * sum_j 1/m_ij - 1). Zero for singleton groups.
double second_stage_coefficient(const ProbTable& m, std::size_t group);

// Risk of the two-stage MLE with a full first stage and caller-supplied
// second-stage dimensions and coefficients. With full second stages this
// reproduces full_expansion exactly.
RiskExpansion two_stage_expansion(const ProbTable& m,
                                  std::span<const std::size_t> stage_dims,
                                  std::span<const double> stage_coeffs);
RiskExpansion two_stage_expansion(const ProbTable& m);  // full second stages

// Risk of the MLE when all group sums are known. The one-argument form is
// the specialized closed form for full second stages; the general form
// takes caller-supplied (dimension, coefficient) pairs.
RiskExpansion submodel_expansion(const ProbTable& m,
                                 std::span<const std::size_t> stage_dims,
                                 std::span<const double> stage_coeffs);
RiskExpansion submodel_expansion(const ProbTable& m);  // full second stages

// Expansion of full-model risk minus submodel risk (full second stages).
// Its second-order coefficient is negative whenever no group is a
// singleton, so the difference goes negative for small n.
RiskExpansion risk_difference(const ProbTable& m);

// Largest n at which risk_difference evaluates negative, i.e. the largest
// sample size for which the expansion predicts the submodel to be harmful.
// Zero when the difference is never negative.
std::uint64_t negativity_threshold(const ProbTable& m);

}  // namespace multirisk
