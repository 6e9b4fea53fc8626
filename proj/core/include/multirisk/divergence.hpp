#pragma once

#include <vector>

#include "multirisk/prob_table.hpp"

namespace multirisk {

// Kullback-Leibler divergence sum q_ij log(q_ij / m_ij) with the estimate
// in the first slot and the convention 0 log 0 = 0. Finite for any valid
// table because every m_ij > 0.
double kl_divergence(const CellEstimate& q, const ProbTable& m);

struct ChainDecomposition {
    double first_stage;              // KL over group sums
    std::vector<double> per_group;   // q_i. times KL over within-group conditionals
    double total;                    // first_stage + sum(per_group)
};

// Chain-rule split of kl_divergence into the first-stage term and one
// conditional term per group. Requires q to put positive mass on every
// group.
ChainDecomposition chain_decompose(const CellEstimate& q, const ProbTable& m);

}  // namespace multirisk
